//! Curve file parsing: `field = QQ` plus three `g<i> = expr` lines over
//! X1, X2; `#` starts a comment. Diagnostics carry line positions.

use mucurve_core::{parse_poly, MuBasisError, MultiPoly, Parametrization};

#[derive(Debug)]
pub struct CurveFileError {
    pub code: &'static str,
    pub message: String,
}

impl std::fmt::Display for CurveFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl std::error::Error for CurveFileError {}

fn err(code: &'static str, message: impl Into<String>) -> CurveFileError {
    CurveFileError { code, message: message.into() }
}

pub fn parse_curve(text: &str) -> Result<Parametrization, CurveFileError> {
    let mut field: Option<(usize, String)> = None;
    let mut g: [Option<(usize, MultiPoly)>; 3] = [None, None, None];
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(err("E_SYNTAX", format!("expected `name = expr` at line {lineno}")));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "field" => field = Some((lineno, value.to_string())),
            "g1" | "g2" | "g3" => {
                let poly = parse_poly(value).map_err(|e| {
                    err("E_SYNTAX", format!("{} in {key} at line {lineno}, column {}", e.msg, e.col))
                })?;
                for (_, mono) in poly.terms() {
                    for (v, _) in mono {
                        if v != mucurve_core::Var::X1 && v != mucurve_core::Var::X2 {
                            return Err(err(
                                "E_SYNTAX",
                                format!("{key} may only use X1 and X2 (found {v}) at line {lineno}"),
                            ));
                        }
                    }
                }
                let slot = key.as_bytes()[1] - b'1';
                g[slot as usize] = Some((lineno, poly));
            }
            other => {
                return Err(err("E_SYNTAX", format!("unknown key {other:?} at line {lineno}")));
            }
        }
    }
    match field {
        None => return Err(err("E_FIELD", "missing `field = QQ` line")),
        Some((lineno, tag)) if tag != "QQ" => {
            return Err(err("E_FIELD", format!("unsupported field {tag:?} at line {lineno} (only QQ)")));
        }
        _ => {}
    }
    let mut polys = Vec::new();
    let mut lines = Vec::new();
    for (i, slot) in g.into_iter().enumerate() {
        match slot {
            Some((lineno, p)) => {
                polys.push(p);
                lines.push(lineno);
            }
            None => return Err(err("E_SYNTAX", format!("missing g{}", i + 1))),
        }
    }
    let [g1, g2, g3]: [MultiPoly; 3] = polys.try_into().expect("three entries");
    Parametrization::new(g1, g2, g3).map_err(|e| match e {
        MuBasisError::NotBinaryForm => {
            err("E_NOT_HOMOGENEOUS", format!("not homogeneous (g lines at {lines:?})"))
        }
        MuBasisError::UnequalDegrees => err("E_UNEQUAL_DEGREES", "g1, g2, g3 have different degrees"),
        MuBasisError::ImproperParametrization => err("E_GCD", "gcd is not constant"),
        MuBasisError::Degenerate => err("E_DEGENERATE", "degenerate parametrization"),
        MuBasisError::DegreeTooSmall => err("E_DEGREE", "degree must be at least 2"),
        MuBasisError::Internal(m) => err("E_INTERNAL", m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cusp() {
        let text = "# cusp\nfield = QQ\ng1 = X1^2*X2\ng2 = X1^3\ng3 = X2^3\n";
        let phi = parse_curve(text).unwrap();
        assert_eq!(phi.degree(), 3);
    }

    #[test]
    fn reports_inhomogeneous() {
        let text = "field = QQ\ng1 = X1^2 + X2\ng2 = X1^2\ng3 = X2^2\n";
        let e = parse_curve(text).unwrap_err();
        assert_eq!(e.code, "E_NOT_HOMOGENEOUS");
    }

    #[test]
    fn reports_gcd() {
        let text = "field = QQ\ng1 = X1^3\ng2 = X1^2*X2\ng3 = X1*X2^2\n";
        let e = parse_curve(text).unwrap_err();
        assert_eq!(e.code, "E_GCD");
    }

    #[test]
    fn reports_syntax_position() {
        let text = "field = QQ\ng1 = X1^2*\ng2 = X1^2\ng3 = X2^2\n";
        let e = parse_curve(text).unwrap_err();
        assert_eq!(e.code, "E_SYNTAX");
        assert!(e.message.contains("line 2"), "{}", e.message);
    }

    #[test]
    fn rejects_other_fields() {
        let text = "field = GF7\ng1 = X1^2\ng2 = X1*X2\ng3 = X2^2\n";
        assert_eq!(parse_curve(text).unwrap_err().code, "E_FIELD");
    }
}
