//! Output records. Every subcommand builds one of these; the machine format
//! is its JSON serialization and the pretty format is rendered from the same
//! strings, so both carry the same content.

use std::fmt::Write as _;

use serde::Serialize;
use toric_orbifold::chen_ruan::{
    multiplication_table, rational_degree, ClassDegree, StructureConstant,
};
use toric_orbifold::nh_restriction::NhClass;
use toric_orbifold::stanley_reisner::SrPresentation;
use toric_orbifold::{CrClass, FacetSet, LabeledPolytope, Monomial, PolytopeError, ToricOrbifold};

fn one_based(s: FacetSet) -> Vec<usize> {
    s.to_one_based()
}

fn braces<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn tuple(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() {
        "0".into()
    } else {
        format!("<{}>", gens.join(", "))
    }
}

/// Column-aligned table with ` | ` separators.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(|h| width(h)).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(width(cell));
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
            .collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut out = line(headers.to_vec());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&format!("{}\n", rule.join("-+-")));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

#[derive(Serialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

impl From<&PolytopeError> for ErrorRecord {
    fn from(e: &PolytopeError) -> Self {
        ErrorRecord {
            kind: e.name().into(),
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub dim: usize,
    pub facets: usize,
    pub vertices: Option<usize>,
    pub error: Option<ErrorRecord>,
}

impl ValidateReport {
    pub fn new(p: &LabeledPolytope) -> Self {
        let (vertices, error) = match p.face_complex() {
            Ok(fc) => (Some(fc.vertices().len()), None),
            Err(e) => (None, Some(ErrorRecord::from(&e))),
        };
        ValidateReport {
            valid: error.is_none(),
            dim: p.dim(),
            facets: p.num_facets(),
            vertices,
            error,
        }
    }

    pub fn pretty(&self) -> String {
        match &self.error {
            None => format!(
                "valid: simple {}-dimensional polytope with {} facets and {} vertices\n",
                self.dim,
                self.facets,
                self.vertices.unwrap_or(0)
            ),
            Some(e) => format!("invalid: {}\n", e.message),
        }
    }
}

#[derive(Serialize)]
pub struct VertexRecord {
    pub index: usize,
    pub point: Vec<String>,
    pub facets: Vec<usize>,
}

#[derive(Serialize)]
pub struct VerticesReport {
    pub vertices: Vec<VertexRecord>,
}

impl VerticesReport {
    pub fn new(orb: &ToricOrbifold) -> Self {
        let vertices = orb
            .complex()
            .vertices()
            .iter()
            .enumerate()
            .map(|(k, v)| VertexRecord {
                index: k,
                point: v.point.iter().map(ToString::to_string).collect(),
                facets: one_based(v.facet_set),
            })
            .collect();
        VerticesReport { vertices }
    }

    pub fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| vec![format!("v{}", v.index), tuple(&v.point), braces(&v.facets)])
            .collect();
        table(&["vertex", "point", "facets"], &rows)
    }
}

#[derive(Serialize)]
pub struct EdgeRecord {
    pub vertices: [usize; 2],
    /// Facets containing the edge.
    pub facets: Vec<usize>,
}

#[derive(Serialize)]
pub struct ComplexReport {
    pub facets: usize,
    pub minimal_nonfaces: Vec<Vec<usize>>,
    pub edges: Vec<EdgeRecord>,
}

impl ComplexReport {
    pub fn new(orb: &ToricOrbifold) -> Self {
        let fc = orb.complex();
        let vs = fc.vertices();
        ComplexReport {
            facets: fc.num_facets(),
            minimal_nonfaces: fc
                .minimal_nonfaces()
                .iter()
                .map(|s| one_based(*s))
                .collect(),
            edges: fc
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    vertices: [e.left, e.right],
                    facets: one_based(vs[e.left].facet_set.intersection(vs[e.right].facet_set)),
                })
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let mut out = format!("facets: {}\nminimal non-faces:", self.facets);
        for s in &self.minimal_nonfaces {
            out.push_str(&format!(" {}", braces(s)));
        }
        out.push_str("\nedges:\n");
        let rows: Vec<Vec<String>> = self
            .edges
            .iter()
            .map(|e| {
                vec![
                    format!("v{} - v{}", e.vertices[0], e.vertices[1]),
                    braces(&e.facets),
                ]
            })
            .collect();
        out.push_str(&table(&["edge", "facets"], &rows));
        out
    }
}

#[derive(Serialize)]
pub struct FaceRecord {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

impl FaceRecord {
    fn text(&self) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|v| format!("v{v}")).collect();
        format!("dim {} {}", self.dim, braces(&vs))
    }
}

#[derive(Serialize)]
pub struct SectorRecord {
    pub index: usize,
    pub coords: Vec<String>,
    pub root_of_unity: Vec<String>,
    pub support: Vec<usize>,
    pub fixed_face: FaceRecord,
    pub two_age: String,
    pub ideal: Vec<String>,
}

#[derive(Serialize)]
pub struct SectorsReport {
    pub sectors: Vec<SectorRecord>,
}

impl SectorsReport {
    pub fn new(orb: &ToricOrbifold) -> Self {
        let m = orb.num_vars();
        let n = orb.polytope().dim();
        let sectors = orb
            .sectors()
            .iter()
            .map(|(id, s)| SectorRecord {
                index: id.0,
                coords: s.element.coords().iter().map(ToString::to_string).collect(),
                root_of_unity: s.element.root_of_unity_form(),
                support: one_based(s.support),
                fixed_face: FaceRecord {
                    dim: n - s.support.len(),
                    vertices: orb.complex().vertices_of_face(s.support).collect(),
                },
                two_age: s.degree_shift().to_string(),
                ideal: orb
                    .sector_module(id)
                    .expect("listed sector")
                    .ideal_generators()
                    .into_iter()
                    .map(|g| Monomial::squarefree(m, g).to_string())
                    .collect(),
            })
            .collect();
        SectorsReport { sectors }
    }

    pub fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .sectors
            .iter()
            .map(|s| {
                vec![
                    format!("g{}", s.index),
                    tuple(&s.coords),
                    tuple(&s.root_of_unity),
                    braces(&s.support),
                    s.fixed_face.text(),
                    s.two_age.clone(),
                    ideal_text(&s.ideal),
                ]
            })
            .collect();
        table(
            &[
                "sector",
                "coords",
                "root of unity",
                "support",
                "fixed face",
                "2*age",
                "ideal",
            ],
            &rows,
        )
    }
}

#[derive(Serialize)]
pub struct SrReport {
    pub variables: usize,
    pub ideal: Vec<String>,
    pub degree_bound: u32,
    /// Number of standard monomials in each degree `0..=degree_bound`.
    pub hilbert: Vec<usize>,
}

impl SrReport {
    pub fn new(orb: &ToricOrbifold, degree_bound: u32) -> Self {
        let m = orb.num_vars();
        let pres = SrPresentation::untwisted(orb.complex());
        SrReport {
            variables: m,
            ideal: pres
                .ideal_generators()
                .into_iter()
                .map(|g| Monomial::squarefree(m, g).to_string())
                .collect(),
            degree_bound,
            hilbert: (0..=degree_bound)
                .map(|d| {
                    Monomial::all_of_degree(m, d)
                        .iter()
                        .filter(|x| pres.is_standard(x))
                        .count()
                })
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let vars: Vec<String> = (1..=self.variables).map(|i| format!("x{i}")).collect();
        let hilbert: Vec<String> = self.hilbert.iter().map(ToString::to_string).collect();
        format!(
            "Z[{}] / {}\nstandard monomials by degree 0..={}: {}\n",
            vars.join(","),
            ideal_text(&self.ideal),
            self.degree_bound,
            hilbert.join(" ")
        )
    }
}

#[derive(Serialize)]
pub struct EntryRecord {
    pub left: usize,
    pub right: usize,
    pub target: Option<usize>,
    pub virtual_factor: String,
    pub euler_factor: String,
    pub value: String,
}

impl EntryRecord {
    fn new(sc: &StructureConstant) -> Self {
        let value = match sc.target {
            None => "0".to_string(),
            Some(t) if sc.virtual_set.is_empty() && sc.euler_set.is_empty() => format!("1_{t}"),
            Some(_) => sc.to_string(),
        };
        EntryRecord {
            left: sc.left.0,
            right: sc.right.0,
            target: sc.target.map(|t| t.0),
            virtual_factor: sc.virtual_monomial().to_string(),
            euler_factor: sc.euler_monomial().to_string(),
            value,
        }
    }
}

#[derive(Serialize)]
pub struct ProductTableReport {
    pub sectors: Vec<Vec<String>>,
    pub entries: Vec<Vec<EntryRecord>>,
}

impl ProductTableReport {
    pub fn new(orb: &ToricOrbifold) -> Self {
        ProductTableReport {
            sectors: orb
                .sectors()
                .iter()
                .map(|(_, s)| s.element.coords().iter().map(ToString::to_string).collect())
                .collect(),
            entries: multiplication_table(orb)
                .iter()
                .map(|row| row.iter().map(EntryRecord::new).collect())
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, coords) in self.sectors.iter().enumerate() {
            let _ = writeln!(out, "g{k} = {}", tuple(coords));
        }
        out.push('\n');
        let names: Vec<String> = (0..self.sectors.len()).map(|k| format!("1_g{k}")).collect();
        let mut headers = vec!["g\\h"];
        headers.extend(names.iter().map(String::as_str));
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let mut r = vec![names[k].clone()];
                r.extend(row.iter().map(|e| e.value.clone()));
                r
            })
            .collect();
        out.push_str(&table(&headers, &rows));
        out
    }
}

#[derive(Serialize)]
pub struct ComponentRecord {
    pub sector: usize,
    pub polynomial: String,
}

#[derive(Serialize)]
pub struct ClassRecord {
    pub components: Vec<ComponentRecord>,
    /// `2 deg p + 2 age(g)` when the class is homogeneous, `"mixed"` when it
    /// is not, `"zero"` for the zero class.
    pub degree: String,
}

impl ClassRecord {
    pub fn new(orb: &ToricOrbifold, c: &CrClass) -> Self {
        let degree = match rational_degree(orb, c).expect("parsed classes are well-formed") {
            ClassDegree::Zero => "zero".into(),
            ClassDegree::Homogeneous(d) => d.to_string(),
            ClassDegree::NonHomogeneous => "mixed".into(),
        };
        ClassRecord {
            components: c
                .components()
                .map(|(g, p)| ComponentRecord {
                    sector: g.0,
                    polynomial: p.to_string(),
                })
                .collect(),
            degree,
        }
    }

    fn text(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("({})@{}", c.polynomial, c.sector))
            .collect();
        parts.join(" + ")
    }
}

#[derive(Serialize)]
pub struct MultiplyReport {
    pub left: ClassRecord,
    pub right: ClassRecord,
    pub product: ClassRecord,
}

impl MultiplyReport {
    pub fn pretty(&self) -> String {
        format!(
            "left:    {}  [degree {}]\nright:   {}  [degree {}]\nproduct: {}  [degree {}]\n",
            self.left.text(),
            self.left.degree,
            self.right.text(),
            self.right.degree,
            self.product.text(),
            self.product.degree
        )
    }
}

#[derive(Serialize)]
pub struct LocalRecord {
    pub sector: usize,
    pub vertex: usize,
    pub polynomial: String,
}

#[derive(Serialize)]
pub struct RestrictReport {
    pub class: ClassRecord,
    pub components: Vec<LocalRecord>,
}

impl RestrictReport {
    pub fn new(orb: &ToricOrbifold, c: &CrClass, r: &NhClass) -> Self {
        RestrictReport {
            class: ClassRecord::new(orb, c),
            components: r
                .components()
                .map(|((g, v), p)| LocalRecord {
                    sector: g.0,
                    vertex: v,
                    polynomial: p.to_string(),
                })
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let mut out = format!("class: {}\n", self.class.text());
        let rows: Vec<Vec<String>> = self
            .components
            .iter()
            .map(|c| {
                vec![
                    format!("g{}", c.sector),
                    format!("v{}", c.vertex),
                    c.polynomial.clone(),
                ]
            })
            .collect();
        out.push_str(&table(&["sector", "vertex", "restriction"], &rows));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a   | bb\n----+---\nccc | d\n");
    }

    #[test]
    fn unit_entries_are_abbreviated() {
        let orb = ToricOrbifold::new(toric_orbifold::catalog::weighted_p2_124()).unwrap();
        let r = ProductTableReport::new(&orb);
        let values: Vec<Vec<&str>> = r
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.value.as_str()).collect())
            .collect();
        assert_eq!(values[0], ["1_g0", "1_g1", "1_g2", "1_g3"]);
        assert_eq!(values[2][2], "(1)·(x2)·1_g1");
    }
}
