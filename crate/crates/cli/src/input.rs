//! Reader for the polytope file format described in `FORMAT.md`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use toric_orbifold::{LabeledPolytope, PolytopeError, Rational};

/// A grammar violation, positioned at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Why a file did not produce a polytope.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("ParseError at {0}")]
    Parse(#[from] ParseError),
    /// The file is grammatical but the data is rejected by the polytope
    /// constructor (e.g. too few facets).
    #[error("{0}")]
    Polytope(#[from] PolytopeError),
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch == ' ' || ch == '\t', start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    out
}

fn is_integer(s: &str) -> bool {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

#[derive(Default)]
struct FacetBlock {
    line: usize,
    normal: Option<Vec<BigInt>>,
    label: Option<BigInt>,
    offset: Option<Rational>,
}

struct Parser {
    line: usize,
}

impl Parser {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn integer(&self, t: Token<'_>) -> Result<BigInt, ParseError> {
        if !is_integer(t.text) {
            return Err(self.err(t.column, format!("expected an integer, found `{}`", t.text)));
        }
        Ok(t.text.parse().expect("checked digits"))
    }

    fn rational(&self, t: Token<'_>) -> Result<Rational, ParseError> {
        match t.text.split_once('/') {
            None => Ok(Rational::from_integer(self.integer(t)?)),
            Some((p, q)) => {
                if !is_integer(p) || !q.bytes().all(|b| b.is_ascii_digit()) || q.is_empty() {
                    return Err(self.err(
                        t.column,
                        format!("expected a rational p/q, found `{}`", t.text),
                    ));
                }
                let q: BigInt = q.parse().expect("checked digits");
                if q.is_zero() {
                    return Err(self.err(t.column + p.len() + 1, "zero denominator"));
                }
                Ok(Rational::new(p.parse().expect("checked digits"), q))
            }
        }
    }

    /// Exactly `n` arguments after the keyword.
    fn args<'a>(&self, toks: &[Token<'a>], n: usize) -> Result<Vec<Token<'a>>, ParseError> {
        let kw = toks[0];
        if toks.len() - 1 != n {
            let last = toks[toks.len() - 1];
            let column = toks
                .get(n + 1)
                .map_or(last.column + last.text.len(), |t| t.column);
            return Err(self.err(
                column,
                format!(
                    "`{}` takes {n} value{}, found {}",
                    kw.text,
                    if n == 1 { "" } else { "s" },
                    toks.len() - 1
                ),
            ));
        }
        Ok(toks[1..].to_vec())
    }
}

/// Parses a polytope file. Grammar errors come back positioned; data the
/// polytope constructor rejects comes back as a [`PolytopeError`].
pub fn parse_polytope(text: &str) -> Result<LabeledPolytope, LoadError> {
    let mut p = Parser { line: 0 };
    let mut dim: Option<usize> = None;
    let mut blocks: Vec<FacetBlock> = Vec::new();

    for (k, raw) in text.split('\n').enumerate() {
        p.line = k + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let line = raw.split_once('#').map_or(raw, |(before, _)| before);
        let toks = tokens(line);
        let Some(&kw) = toks.first() else { continue };
        match kw.text {
            "dim" => {
                if dim.is_some() {
                    return Err(p.err(kw.column, "duplicate `dim`").into());
                }
                if !blocks.is_empty() {
                    return Err(p.err(kw.column, "`dim` must precede every facet").into());
                }
                let v = p.args(&toks, 1)?[0];
                let n = p.integer(v)?;
                if !n.is_positive() {
                    return Err(p.err(v.column, "dimension must be positive").into());
                }
                dim = Some(
                    n.try_into()
                        .map_err(|_| p.err(v.column, "dimension too large"))?,
                );
            }
            "facet" => {
                if dim.is_none() {
                    return Err(p.err(kw.column, "`facet` before `dim`").into());
                }
                p.args(&toks, 0)?;
                if let Some(b) = blocks.last() {
                    check_complete(b, p.line, kw.column)?;
                }
                blocks.push(FacetBlock {
                    line: p.line,
                    ..FacetBlock::default()
                });
            }
            "normal" | "label" | "offset" => {
                let Some(block) = blocks.last_mut() else {
                    return Err(p
                        .err(kw.column, format!("`{}` outside a facet block", kw.text))
                        .into());
                };
                match kw.text {
                    "normal" => {
                        if block.normal.is_some() {
                            return Err(p.err(kw.column, "duplicate `normal`").into());
                        }
                        let vals = p.args(&toks, dim.expect("dim precedes facets"))?;
                        block.normal = Some(
                            vals.into_iter()
                                .map(|t| p.integer(t))
                                .collect::<Result<_, _>>()?,
                        );
                    }
                    "label" => {
                        if block.label.is_some() {
                            return Err(p.err(kw.column, "duplicate `label`").into());
                        }
                        let v = p.args(&toks, 1)?[0];
                        let b = p.integer(v)?;
                        if !b.is_positive() {
                            return Err(p.err(v.column, "label must be a positive integer").into());
                        }
                        block.label = Some(b);
                    }
                    _ => {
                        if block.offset.is_some() {
                            return Err(p.err(kw.column, "duplicate `offset`").into());
                        }
                        let v = p.args(&toks, 1)?[0];
                        block.offset = Some(p.rational(v)?);
                    }
                }
            }
            other => {
                return Err(p
                    .err(kw.column, format!("unknown keyword `{other}`"))
                    .into())
            }
        }
    }

    let eof = ParseError {
        line: text.lines().count().max(1),
        column: 1,
        message: String::new(),
    };
    let Some(dim) = dim else {
        return Err(ParseError {
            message: "missing `dim`".into(),
            ..eof
        }
        .into());
    };
    if let Some(b) = blocks.last() {
        check_complete(b, eof.line, eof.column)?;
    }
    let mut normals = Vec::new();
    let mut labels = Vec::new();
    let mut offsets = Vec::new();
    for b in blocks {
        normals.push(b.normal.expect("complete"));
        labels.push(b.label.expect("complete"));
        offsets.push(b.offset.expect("complete"));
    }
    Ok(LabeledPolytope::new(dim, normals, labels, offsets)?)
}

fn check_complete(b: &FacetBlock, line: usize, column: usize) -> Result<(), ParseError> {
    let missing = [
        ("normal", b.normal.is_none()),
        ("label", b.label.is_none()),
        ("offset", b.offset.is_none()),
    ]
    .into_iter()
    .find(|&(_, m)| m);
    match missing {
        Some((key, _)) => Err(ParseError {
            line,
            column,
            message: format!("facet opened on line {} has no `{key}`", b.line),
        }),
        None => Ok(()),
    }
}

/// Canonical text for a polytope; [`parse_polytope`] reads it back unchanged.
pub fn write_polytope(p: &LabeledPolytope) -> String {
    let mut out = format!("dim {}\n", p.dim());
    for i in 0..p.num_facets() {
        let normal: Vec<String> = p.normals()[i].iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "\nfacet\n  normal {}\n  label {}\n  offset {}\n",
            normal.join(" "),
            p.labels()[i],
            p.offsets()[i]
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_orbifold::catalog;

    fn parse_err(text: &str) -> ParseError {
        match parse_polytope(text) {
            Err(LoadError::Parse(e)) => e,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trips_catalog() {
        for (name, p) in catalog::all() {
            let text = write_polytope(&p);
            assert_eq!(parse_polytope(&text).unwrap(), p, "{name}");
        }
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let text = "# header\r\ndim 1   # the line\r\n\r\nfacet\r\n normal 1\r\n label 2\r\n offset 0\r\nfacet\r\n\toffset 3/2\r\n normal -1\r\n label 1\r\n";
        let p = parse_polytope(text).unwrap();
        assert_eq!(p.labels(), &[BigInt::from(2), BigInt::from(1)]);
        assert_eq!(p.offsets()[1], Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn rationals_are_reduced() {
        let p = parse_polytope(
            "dim 1\nfacet\nnormal 1\nlabel 1\noffset 4/6\nfacet\nnormal -1\nlabel 1\noffset +2\n",
        )
        .unwrap();
        assert_eq!(p.offsets()[0], Rational::new(2.into(), 3.into()));
        assert_eq!(p.offsets()[1], Rational::from_integer(2.into()));
    }

    #[test]
    fn positioned_errors() {
        let e = parse_err("dim 2\nfacet\n  normal 1 x\n");
        assert_eq!((e.line, e.column), (3, 12));

        let e = parse_err("dim 2\nfacet\n  normal 1\n");
        assert_eq!((e.line, e.column), (3, 11));

        let e = parse_err("dim 1\nfacet\n  label 0\n");
        assert_eq!((e.line, e.column), (3, 9));

        let e = parse_err("dim 1\nfacet\n  offset 1/0\n");
        assert_eq!((e.line, e.column), (3, 12));

        let e = parse_err("dim 1\nfacet\n  normal 1\nfacet\n");
        assert_eq!((e.line, e.column), (4, 1));
        assert!(e.message.contains("line 2"));

        let e = parse_err("normal 1\n");
        assert_eq!((e.line, e.column), (1, 1));

        let e = parse_err("dim 1\nvertex 0\n");
        assert!(e.message.contains("unknown keyword"));

        let e = parse_err("# nothing\n");
        assert!(e.message.contains("missing `dim`"));
        assert_eq!((e.line, e.column), (1, 1));

        let e = parse_err("dim 1\nfacet\n  normal 1\n  label 1\n");
        assert_eq!((e.line, e.column), (4, 1));
        assert!(e.message.contains("no `offset`"));
    }

    #[test]
    fn constructor_errors_are_not_parse_errors() {
        let r = parse_polytope("dim 2\nfacet\nnormal 1 0\nlabel 1\noffset 0\n");
        assert!(matches!(
            r,
            Err(LoadError::Polytope(PolytopeError::Malformed(_)))
        ));
    }
}
