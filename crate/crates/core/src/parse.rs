//! The line-oriented algebra file format.
//!
//! ```text
//! # comment
//! field Q            (or: field F 5)
//! vertices 1 2 3
//! arrow a 1 2
//! relation a*b - 1/2 * c*d
//! cap 50
//! ```
//!
//! Paths are written left to right in traversal order: `a*b` walks `a`
//! first. Coefficients are optional integers or fractions followed by `*`.
//! LF and CRLF both work; `#` comments run to end of line.

use crate::algebra::{Path, Presentation, Quiver, Relation, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

struct Tok {
    text: String,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok> {
    let mut toks = Vec::new();
    let mut cur = String::new();
    let mut start = 0usize;
    for (i, ch) in line.chars().enumerate() {
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() {
            if !cur.is_empty() {
                toks.push(Tok {
                    text: std::mem::take(&mut cur),
                    col: start + 1,
                });
            }
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        toks.push(Tok {
            text: cur,
            col: start + 1,
        });
    }
    toks
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        col,
        message: message.into(),
    }
}

/// A relation term before name resolution: coefficient and arrow names.
struct RawTerm {
    negate: bool,
    coeff: Option<(i64, i64)>,
    arrows: Vec<String>,
    col: usize,
}

/// Splits the token stream of a relation body into signed terms. A term is
/// a `*`-joined product whose first factor may be a coefficient; `+`/`-`
/// between terms may be separate tokens or glued to the next one.
fn parse_relation_terms(toks: &[Tok], line: usize) -> Result<Vec<RawTerm>> {
    // Re-join into one string with column bookkeeping by scanning factors.
    let mut terms: Vec<RawTerm> = Vec::new();
    let mut pending_sign: Option<bool> = Some(false); // leading term: positive
    let mut current: Option<RawTerm> = None;

    let flush = |current: &mut Option<RawTerm>, terms: &mut Vec<RawTerm>| -> Result<()> {
        if let Some(t) = current.take() {
            if t.arrows.is_empty() {
                return Err(syntax(line, t.col, "term has no path"));
            }
            terms.push(t);
        }
        Ok(())
    };

    for tok in toks {
        let mut text = tok.text.as_str();
        let mut col = tok.col;
        loop {
            if text.is_empty() {
                break;
            }
            if text == "+" || text == "-" {
                flush(&mut current, &mut terms)?;
                pending_sign = Some(text == "-");
                break;
            }
            if let Some(rest) = text.strip_prefix('+') {
                if current.is_none() && pending_sign.is_none() {
                    pending_sign = Some(false);
                } else if current.is_some() {
                    flush(&mut current, &mut terms)?;
                    pending_sign = Some(false);
                }
                text = rest;
                col += 1;
                continue;
            }
            if let Some(rest) = text.strip_prefix('-') {
                // A '-' glued to a factor ends the previous term.
                flush(&mut current, &mut terms)?;
                pending_sign = Some(true);
                text = rest;
                col += 1;
                continue;
            }
            // A factor chunk: pieces joined by '*'.
            let negate = pending_sign.take().unwrap_or(false);
            let term = current.get_or_insert(RawTerm {
                negate,
                coeff: None,
                arrows: Vec::new(),
                col,
            });
            for piece in text.split('*') {
                if piece.is_empty() {
                    continue;
                }
                if piece.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    if !term.arrows.is_empty() || term.coeff.is_some() {
                        return Err(syntax(
                            line,
                            col,
                            "coefficient must be the first factor of a term",
                        ));
                    }
                    let (n, d) = match piece.split_once('/') {
                        Some((n, d)) => (
                            n.parse::<i64>().map_err(|_| {
                                syntax(line, col, format!("bad numerator `{n}`"))
                            })?,
                            d.parse::<i64>().map_err(|_| {
                                syntax(line, col, format!("bad denominator `{d}`"))
                            })?,
                        ),
                        None => (
                            piece
                                .parse::<i64>()
                                .map_err(|_| syntax(line, col, format!("bad integer `{piece}`")))?,
                            1,
                        ),
                    };
                    term.coeff = Some((n, d));
                } else {
                    term.arrows.push(piece.to_string());
                }
            }
            break;
        }
    }
    flush(&mut current, &mut terms)?;
    if terms.is_empty() {
        return Err(syntax(line, 1, "relation has no terms"));
    }
    Ok(terms)
}

/// Parses the full algebra file into a [`Presentation`].
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut field: Option<FieldSpec> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    // Relations are resolved after the quiver is complete.
    let mut raw_relations: Vec<(usize, Vec<RawTerm>)> = Vec::new();
    let mut cap = DEFAULT_DEGREE_CAP;

    for (lineno0, raw_line) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        let toks = tokenize(line);
        if toks.is_empty() {
            continue;
        }
        match toks[0].text.as_str() {
            "field" => {
                let spec = match toks.get(1).map(|t| t.text.as_str()) {
                    Some("Q") => FieldSpec::Rationals,
                    Some("F") => {
                        let p = toks
                            .get(2)
                            .ok_or_else(|| syntax(lineno, toks[1].col, "missing prime after F"))?;
                        let pv: u64 = p
                            .text
                            .parse()
                            .map_err(|_| syntax(lineno, p.col, "prime must be an integer"))?;
                        FieldSpec::prime_field(pv)
                            .map_err(|e| syntax(lineno, p.col, e.to_string()))?
                    }
                    _ => {
                        return Err(syntax(
                            lineno,
                            toks[0].col,
                            "expected `field Q` or `field F <p>`",
                        ))
                    }
                };
                field = Some(spec);
            }
            "vertices" => {
                if toks.len() < 2 {
                    return Err(syntax(lineno, toks[0].col, "vertices line needs names"));
                }
                vertices.extend(toks[1..].iter().map(|t| t.text.clone()));
            }
            "arrow" => {
                if toks.len() != 4 {
                    return Err(syntax(
                        lineno,
                        toks[0].col,
                        "expected `arrow <name> <source> <target>`",
                    ));
                }
                arrows.push((toks[1].text.clone(), toks[2].text.clone(), toks[3].text.clone()));
            }
            "relation" => {
                let terms = parse_relation_terms(&toks[1..], lineno)?;
                raw_relations.push((lineno, terms));
            }
            "cap" => {
                let c = toks
                    .get(1)
                    .ok_or_else(|| syntax(lineno, toks[0].col, "missing cap value"))?;
                cap = c
                    .text
                    .parse()
                    .map_err(|_| syntax(lineno, c.col, "cap must be an integer"))?;
            }
            other => {
                return Err(syntax(
                    lineno,
                    toks[0].col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let field = field.unwrap_or(FieldSpec::Rationals);
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (lineno, terms) in raw_relations {
        let mut resolved: Vec<(Scalar, Path)> = Vec::new();
        for t in terms {
            if t.arrows.len() < 2 {
                return Err(syntax(
                    lineno,
                    t.col,
                    "relation paths must have length at least 2",
                ));
            }
            let ids: Vec<usize> = t
                .arrows
                .iter()
                .map(|name| quiver.arrow_index(name))
                .collect::<Result<_>>()?;
            let path = Path::from_arrows(&quiver, &ids)?;
            let (n, d) = t.coeff.unwrap_or((1, 1));
            let mut c = field.ratio(n, d)?;
            if t.negate {
                c = field.neg(&c);
            }
            resolved.push((c, path));
        }
        relations.push(Relation { terms: resolved });
    }
    let mut p = Presentation::new(field, quiver, relations);
    p.degree_cap = cap;
    p.validate()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_quiver_without_relations() {
        let p = parse_presentation("# A2\nfield Q\nvertices 1 2\narrow a 1 2\n").unwrap();
        assert_eq!(p.quiver.vertices.len(), 2);
        assert_eq!(p.quiver.arrows.len(), 1);
        assert!(p.relations.is_empty());
    }

    #[test]
    fn parses_four_relations() {
        let text = "field Q\nvertices 1 2 3\narrow d 2 1\narrow a 1 2\narrow b 1 3\narrow t 3 1\nrelation d*a\nrelation a*d\nrelation b*t\nrelation t*b\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relations.len(), 4);
    }

    #[test]
    fn parses_coefficients_and_differences() {
        let p = parse_presentation(
            "field Q\nvertices 1\narrow x 1 1\narrow y 1 1\nrelation x*y - y*x\nrelation 1/2 * x*x + -1 * y*y\n",
        )
        .unwrap();
        assert_eq!(p.relations.len(), 2);
        let r = &p.relations[1];
        assert_eq!(r.terms[0].0, p.field.ratio(1, 2).unwrap());
        assert_eq!(r.terms[1].0, p.field.int(-1));
    }

    #[test]
    fn length_one_relation_is_a_syntax_error() {
        let err = parse_presentation("field Q\nvertices 1 2\narrow a 1 2\nrelation a\n")
            .unwrap_err();
        match err {
            Error::SyntaxError { line, .. } => assert_eq!(line, 4),
            other => panic!("expected SyntaxError, got {other:?}"),
        }
    }

    #[test]
    fn unknown_arrow_and_noncomposable_path() {
        let err =
            parse_presentation("field Q\nvertices 1 2\narrow a 1 2\nrelation a*zz\n").unwrap_err();
        assert!(matches!(err, Error::UnknownArrow(_)));
        let err = parse_presentation("field Q\nvertices 1 2\narrow a 1 2\nrelation a*a\n")
            .unwrap_err();
        assert!(matches!(err, Error::NonComposablePath(_)));
    }

    #[test]
    fn crlf_and_prime_fields() {
        let p = parse_presentation("field F 5\r\nvertices 1\r\narrow x 1 1\r\nrelation x*x\r\n")
            .unwrap();
        assert_eq!(p.field, FieldSpec::PrimeField(5));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse_presentation("field Q\nvertices 1\nbogus line\n").unwrap_err();
        match err {
            Error::SyntaxError { line, col, .. } => {
                assert_eq!(line, 3);
                assert_eq!(col, 1);
            }
            other => panic!("expected SyntaxError, got {other:?}"),
        }
    }
}
