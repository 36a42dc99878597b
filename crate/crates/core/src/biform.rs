//! Bihomogeneous forms in (X1, X2) and (T1, T2, T3).

use crate::poly::{MultiPoly, PolyError};
use crate::variable::{T_VARS, X_VARS};

/// A polynomial homogeneous of degree `xdeg` in X1, X2 and of degree
/// `tdeg` in T1, T2, T3. Moving curves, mu-basis elements and inertia
/// forms all live here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiForm {
    poly: MultiPoly,
    xdeg: u32,
    tdeg: u32,
}

impl BiForm {
    /// Validates bihomogeneity and infers the bidegree.
    pub fn new(poly: MultiPoly) -> Result<Self, PolyError> {
        let xdeg = poly.homogeneous_degree_in(&X_VARS).ok_or(PolyError::NotHomogeneous)?;
        let tdeg = poly.homogeneous_degree_in(&T_VARS).ok_or(PolyError::NotHomogeneous)?;
        for (_, mono) in poly.terms() {
            for (v, _) in mono {
                if !X_VARS.contains(&v) && !T_VARS.contains(&v) {
                    return Err(PolyError::NotHomogeneous);
                }
            }
        }
        Ok(BiForm { poly, xdeg, tdeg })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn xdeg(&self) -> u32 {
        self.xdeg
    }

    pub fn tdeg(&self) -> u32 {
        self.tdeg
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Content-normalized representative (positive primitive).
    pub fn primitive(&self) -> BiForm {
        BiForm { poly: self.poly.primitive_part(), xdeg: self.xdeg, tdeg: self.tdeg }
    }
}

impl std::fmt::Display for BiForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::variable::Var::*;

    #[test]
    fn bidegree_inferred() {
        let p = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(T1, 1), (X1, 1)]),
            (Scalar::from_int(-1), vec![(T2, 1), (X2, 1)]),
        ]);
        let b = BiForm::new(p).unwrap();
        assert_eq!((b.xdeg(), b.tdeg()), (1, 1));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let p = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(T1, 1), (X1, 1)]),
            (Scalar::one(), vec![(T2, 1)]),
        ]);
        assert!(BiForm::new(p).is_err());
    }
}
