//! Reading polynomials from files, as text or as a JSON monomial list
//! `{"monomials": [[i, j, "coeff"], ...]}`.

use std::path::Path;

use bisolve_core::arith::Integer;
use bisolve_core::poly::BiPoly;
use serde::Deserialize;

use crate::error::CliError;
use crate::parse::parse_poly;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialFile {
    monomials: Vec<(u32, u32, Coeff)>,
}

/// Coefficients may be JSON strings (any size) or integers.
#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Str(String),
    Int(i64),
}

pub fn parse_monomial_json(s: &str) -> Result<BiPoly, CliError> {
    let file: MonomialFile = serde_json::from_str(s).map_err(|e| CliError::Input(e.to_string()))?;
    let mut terms = Vec::with_capacity(file.monomials.len());
    for (i, j, c) in file.monomials {
        let c = match c {
            Coeff::Int(n) => Integer::from(n),
            Coeff::Str(s) => s
                .trim()
                .parse::<Integer>()
                .map_err(|_| CliError::Input(format!("bad coefficient {s:?} for x^{i}*y^{j}")))?,
        };
        terms.push(((i, j), c));
    }
    // repeated monomials add up
    Ok(terms.into_iter().fold(BiPoly::zero(), |acc, ((i, j), c)| &acc + &BiPoly::monomial(i, j, c)))
}

/// Reads one polynomial from `path`.
pub fn read_poly(path: &Path, json: bool) -> Result<BiPoly, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    if json {
        parse_monomial_json(&text)
    } else {
        parse_poly(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_list() {
        let p = parse_monomial_json(r#"{"monomials": [[2, 0, "1"], [0, 2, 1], [0, 0, "-2"], [0, 0, "0"]]}"#).unwrap();
        assert_eq!(p, BiPoly::from_i64_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]));
        assert!(parse_monomial_json(r#"{"monomials": [[1, 0, "x"]]}"#).is_err());
        assert!(parse_monomial_json(r#"{"terms": []}"#).is_err());
    }
}
