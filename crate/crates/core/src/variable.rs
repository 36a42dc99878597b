//! The variable universe and its canonical order.
//!
//! Everything in this crate lives in one fixed alphabet: the homogeneous
//! parameter variables X1, X2, their Morley partners Y1, Y2, the plane
//! coordinates T1, T2, T3, an unbounded family W0, W1, ... of auxiliary
//! coefficients, and the affine parameters t, x, s. The derived `Ord` is
//! the canonical seniority X1 > X2 > Y1 > Y2 > T1 > T2 > T3 > W0 > W1 >
//! ... > t > x > s, with smaller enum values being more senior.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X1,
    X2,
    Y1,
    Y2,
    T1,
    T2,
    T3,
    W(u32),
    /// the curve parameter `t`
    ParamT,
    /// the affine variable `x`
    AffX,
    /// the second parameter `s`
    ParamS,
}

pub const X_VARS: [Var; 2] = [Var::X1, Var::X2];
pub const Y_VARS: [Var; 2] = [Var::Y1, Var::Y2];
pub const T_VARS: [Var; 3] = [Var::T1, Var::T2, Var::T3];

impl Var {
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "X1" => Some(Var::X1),
            "X2" => Some(Var::X2),
            "Y1" => Some(Var::Y1),
            "Y2" => Some(Var::Y2),
            "T1" => Some(Var::T1),
            "T2" => Some(Var::T2),
            "T3" => Some(Var::T3),
            "t" => Some(Var::ParamT),
            "x" => Some(Var::AffX),
            "s" => Some(Var::ParamS),
            _ => {
                let idx = name.strip_prefix('W')?;
                idx.parse().ok().map(Var::W)
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X1 => write!(f, "X1"),
            Var::X2 => write!(f, "X2"),
            Var::Y1 => write!(f, "Y1"),
            Var::Y2 => write!(f, "Y2"),
            Var::T1 => write!(f, "T1"),
            Var::T2 => write!(f, "T2"),
            Var::T3 => write!(f, "T3"),
            Var::W(i) => write!(f, "W{}", i),
            Var::ParamT => write!(f, "t"),
            Var::AffX => write!(f, "x"),
            Var::ParamS => write!(f, "s"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seniority_order() {
        assert!(Var::X1 < Var::X2);
        assert!(Var::T3 < Var::W(0));
        assert!(Var::W(0) < Var::W(17));
        assert!(Var::W(17) < Var::ParamT);
        assert!(Var::ParamT < Var::AffX && Var::AffX < Var::ParamS);
    }

    #[test]
    fn name_round_trip() {
        for v in [Var::X1, Var::Y2, Var::T3, Var::W(12), Var::ParamT, Var::AffX, Var::ParamS] {
            assert_eq!(Var::parse(&v.to_string()), Some(v));
        }
        assert_eq!(Var::parse("Z"), None);
    }
}
