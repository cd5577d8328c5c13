//! The `check` subcommand: ring axioms, grading and the restriction
//! homomorphism on seeded random classes, plus the injectivity rank test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use num_bigint::BigInt;
use toric_orbifold::chen_ruan::{cr_multiply, rational_degree, ClassDegree};
use toric_orbifold::nh_restriction::{
    check_homomorphism, injectivity_rank_check, nh_multiply, restrict,
};
use toric_orbifold::{CrClass, Monomial, Polynomial, SectorId, ToricOrbifold};

#[derive(Serialize)]
pub struct PropertyRecord {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing input, if any.
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct SectorRankRecord {
    pub sector: usize,
    pub basis_size: usize,
    pub rank: usize,
    pub unit_divisors: Option<bool>,
    pub kernel_witness: Option<String>,
}

#[derive(Serialize)]
pub struct InjectivityRecord {
    pub degree_bound: u32,
    pub strict_z: bool,
    pub sectors: Vec<SectorRankRecord>,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub samples: usize,
    pub properties: Vec<PropertyRecord>,
    pub injectivity: InjectivityRecord,
    pub passed: bool,
}

impl CheckReport {
    pub fn pretty(&self) -> String {
        let mut out = format!("seed {}, {} samples\n", self.seed, self.samples);
        for p in &self.properties {
            let status = if p.failures == 0 { "ok" } else { "FAILED" };
            out.push_str(&format!("{:<14} {status} ({} cases", p.name, p.cases));
            if p.failures > 0 {
                out.push_str(&format!(", {} failures", p.failures));
            }
            out.push_str(")\n");
            if let Some(c) = &p.counterexample {
                out.push_str(&format!("    {c}\n"));
            }
        }
        let inj = &self.injectivity;
        out.push_str(&format!(
            "injectivity up to polynomial degree {}{}:\n",
            inj.degree_bound,
            if inj.strict_z { " (over Z)" } else { "" }
        ));
        for s in &inj.sectors {
            out.push_str(&format!(
                "  g{}: rank {}/{}",
                s.sector, s.rank, s.basis_size
            ));
            match s.unit_divisors {
                Some(true) => out.push_str(", unit elementary divisors"),
                Some(false) => out.push_str(", NON-UNIT elementary divisors"),
                None => {}
            }
            if let Some(w) = &s.kernel_witness {
                out.push_str(&format!(", kernel contains {w}"));
            }
            out.push('\n');
        }
        out.push_str(if self.passed {
            "all checks passed\n"
        } else {
            "some checks FAILED\n"
        });
        out
    }
}

fn random_polynomial(rng: &mut ChaCha8Rng, m: usize, degree: Option<u32>) -> Polynomial {
    let mut p = Polynomial::zero(m);
    for _ in 0..rng.gen_range(1..=3) {
        let d = degree.unwrap_or_else(|| rng.gen_range(0..=2));
        let mut exps = vec![0u32; m];
        for _ in 0..d {
            exps[rng.gen_range(0..m)] += 1;
        }
        let c = rng.gen_range(-5i64..=5);
        p.add_term(
            Monomial::new(exps),
            BigInt::from(if c == 0 { 1 } else { c }),
        );
    }
    p
}

/// Half the samples are homogeneous single-sector classes so the grading
/// check has material to work with.
fn random_class(rng: &mut ChaCha8Rng, orb: &ToricOrbifold) -> CrClass {
    let m = orb.num_vars();
    let ids: Vec<SectorId> = orb.sectors().ids().collect();
    if rng.gen_bool(0.5) {
        let g = *ids.choose(rng).expect("identity sector");
        let d = rng.gen_range(0..=2);
        CrClass::single(orb, g, random_polynomial(rng, m, Some(d))).expect("listed sector")
    } else {
        let parts: Vec<(SectorId, Polynomial)> = (0..rng.gen_range(1..=3))
            .map(|_| {
                (
                    *ids.choose(rng).expect("identity sector"),
                    random_polynomial(rng, m, None),
                )
            })
            .collect();
        CrClass::from_components(orb, parts).expect("listed sectors")
    }
}

struct Tally {
    record: PropertyRecord,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            record: PropertyRecord {
                name,
                cases: 0,
                failures: 0,
                counterexample: None,
            },
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.record.cases += 1;
        if !ok {
            self.record.failures += 1;
            if self.record.counterexample.is_none() {
                self.record.counterexample = Some(describe());
            }
        }
    }
}

pub fn run_checks(
    orb: &ToricOrbifold,
    seed: u64,
    samples: usize,
    degree_bound: u32,
    strict_z: bool,
) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mul = |a: &CrClass, b: &CrClass| cr_multiply(orb, a, b).expect("well-formed classes");
    let one = CrClass::unit(orb, orb.sectors().identity()).expect("identity sector");

    let mut assoc = Tally::new("associativity");
    let mut comm = Tally::new("commutativity");
    let mut unit = Tally::new("unit");
    let mut grading = Tally::new("grading");
    let mut hom = Tally::new("homomorphism");
    let mut star = Tally::new("star-assoc");

    for _ in 0..samples {
        let a = random_class(&mut rng, orb);
        let b = random_class(&mut rng, orb);
        let c = random_class(&mut rng, orb);
        let ab = mul(&a, &b);
        assoc.case(mul(&ab, &c) == mul(&a, &mul(&b, &c)), || {
            format!("a = {a}, b = {b}, c = {c}")
        });
        comm.case(ab == mul(&b, &a), || format!("a = {a}, b = {b}"));
        unit.case(mul(&one, &a) == a && mul(&a, &one) == a, || {
            format!("a = {a}")
        });
        let degrees = (rational_degree(orb, &a), rational_degree(orb, &b));
        if let (Ok(ClassDegree::Homogeneous(da)), Ok(ClassDegree::Homogeneous(db))) = degrees {
            if !ab.is_zero() {
                let dp = rational_degree(orb, &ab).expect("well-formed product");
                grading.case(dp == ClassDegree::Homogeneous(&da + &db), || {
                    format!("a = {a}, b = {b}")
                });
            }
        }
        hom.case(
            check_homomorphism(orb, &a, &b).expect("well-formed classes"),
            || format!("a = {a}, b = {b}"),
        );
        let (ra, rb, rc) = (
            restrict(orb, &a).expect("listed"),
            restrict(orb, &b).expect("listed"),
            restrict(orb, &c).expect("listed"),
        );
        let st = |x, y| nh_multiply(orb, x, y).expect("restricted classes");
        star.case(st(&st(&ra, &rb), &rc) == st(&ra, &st(&rb, &rc)), || {
            format!("a = {a}, b = {b}, c = {c}")
        });
    }

    let inj = injectivity_rank_check(orb, degree_bound, strict_z);
    let injectivity = InjectivityRecord {
        degree_bound,
        strict_z,
        sectors: inj
            .sectors
            .iter()
            .map(|s| SectorRankRecord {
                sector: s.sector.0,
                basis_size: s.basis_size,
                rank: s.rank,
                unit_divisors: s.unit_divisors,
                kernel_witness: s.kernel_witness.as_ref().map(ToString::to_string),
            })
            .collect(),
    };
    let properties: Vec<PropertyRecord> = [assoc, comm, unit, grading, hom, star]
        .into_iter()
        .map(|t| t.record)
        .collect();
    let passed = properties.iter().all(|p| p.failures == 0) && inj.is_injective();
    CheckReport {
        seed,
        samples,
        properties,
        injectivity,
        passed,
    }
}
