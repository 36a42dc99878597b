//! Sylvester matrices, resultants, first-order subresultants and the
//! bordered determinant families D(nu), D1(nu) attached to a pair of
//! binary forms, together with the derivative-of-resultant congruence.

use crate::linalg::PolyMatrix;
use crate::poly::{MultiPoly, PolyError};
use crate::scalar::Scalar;
use crate::variable::Var;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub enum ResultantError {
    BadDegrees(String),
    NuOutOfRange,
    CoefficientInX,
    Poly(PolyError),
}

impl std::fmt::Display for ResultantError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResultantError::BadDegrees(m) => write!(f, "bad degrees: {m}"),
            ResultantError::NuOutOfRange => write!(f, "nu out of range"),
            ResultantError::CoefficientInX => write!(f, "coefficients must be free of X1, X2"),
            ResultantError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ResultantError {}

impl From<PolyError> for ResultantError {
    fn from(e: PolyError) -> Self {
        ResultantError::Poly(e)
    }
}

/// A pair of binary forms f1 = U0 X1^d1 + ... + U_d1 X2^d1 and
/// f2 = V0 X1^d2 + ... + V_d2 X2^d2 with d1 <= d2; the coefficients are
/// arbitrary polynomials not involving X1, X2.
#[derive(Clone, Debug)]
pub struct FormPair {
    u: Vec<MultiPoly>,
    v: Vec<MultiPoly>,
}

impl FormPair {
    /// Extracts coefficient lists from two X-homogeneous polynomials.
    /// The first must have the smaller (or equal) degree.
    pub fn new(f1: &MultiPoly, f2: &MultiPoly) -> Result<Self, ResultantError> {
        let d1 = f1
            .homogeneous_degree_in(&[Var::X1, Var::X2])
            .ok_or_else(|| ResultantError::BadDegrees("f1 not X-homogeneous".into()))?;
        let d2 = f2
            .homogeneous_degree_in(&[Var::X1, Var::X2])
            .ok_or_else(|| ResultantError::BadDegrees("f2 not X-homogeneous".into()))?;
        if f1.is_zero() || f2.is_zero() {
            return Err(ResultantError::BadDegrees("zero form".into()));
        }
        if d1 < 1 {
            return Err(ResultantError::BadDegrees("d1 must be at least 1".into()));
        }
        if d1 > d2 {
            return Err(ResultantError::BadDegrees(format!("d1 = {d1} exceeds d2 = {d2}")));
        }
        let u = f1.binary_coeffs(d1 as usize)?;
        let v = f2.binary_coeffs(d2 as usize)?;
        for c in u.iter().chain(&v) {
            if c.involves_any(&[Var::X1, Var::X2]) {
                return Err(ResultantError::CoefficientInX);
            }
        }
        Ok(FormPair { u, v })
    }

    pub fn from_coeffs(u: Vec<MultiPoly>, v: Vec<MultiPoly>) -> Result<Self, ResultantError> {
        if u.len() < 2 || v.len() < u.len() {
            return Err(ResultantError::BadDegrees("need 1 <= d1 <= d2".into()));
        }
        for c in u.iter().chain(&v) {
            if c.involves_any(&[Var::X1, Var::X2]) {
                return Err(ResultantError::CoefficientInX);
            }
        }
        Ok(FormPair { u, v })
    }

    pub fn d1(&self) -> usize {
        self.u.len() - 1
    }

    pub fn d2(&self) -> usize {
        self.v.len() - 1
    }

    /// delta = d1 + d2 - 2.
    pub fn delta(&self) -> usize {
        self.d1() + self.d2() - 2
    }

    pub fn u_coeffs(&self) -> &[MultiPoly] {
        &self.u
    }

    pub fn v_coeffs(&self) -> &[MultiPoly] {
        &self.v
    }

    pub fn f1_poly(&self) -> MultiPoly {
        assemble_binary(&self.u)
    }

    pub fn f2_poly(&self) -> MultiPoly {
        assemble_binary(&self.v)
    }

    fn u_entry(&self, r: i64) -> MultiPoly {
        if r >= 0 && (r as usize) <= self.d1() {
            self.u[r as usize].clone()
        } else {
            MultiPoly::zero()
        }
    }

    fn v_entry(&self, r: i64) -> MultiPoly {
        if r >= 0 && (r as usize) <= self.d2() {
            self.v[r as usize].clone()
        } else {
            MultiPoly::zero()
        }
    }

    /// The (delta+2) x (delta+2) Sylvester matrix: d2 shifted U-columns
    /// followed by d1 shifted V-columns; row r corresponds to the
    /// monomial X1^(delta+1-r) X2^r.
    pub fn sylvester_matrix(&self) -> PolyMatrix {
        let (d1, d2) = (self.d1(), self.d2());
        let n = d1 + d2;
        PolyMatrix::from_fn(n, n, |r, j| {
            if j < d2 {
                self.u_entry(r as i64 - j as i64)
            } else {
                self.v_entry(r as i64 - (j - d2) as i64)
            }
        })
    }

    pub fn resultant(&self) -> MultiPoly {
        self.sylvester_matrix().det().expect("square Sylvester matrix")
    }

    /// First-order subresultants SRes_0 .. SRes_delta, read off the
    /// bordered (delta+1) x (delta+1) Sylvester determinant by expansion
    /// along its T-column: the determinant equals
    /// sum_i SRes_(delta-i) T_i, so SRes_j is (-1)^j times the minor of
    /// the coefficient block with row delta-j deleted.
    pub fn subresultants(&self) -> Vec<MultiPoly> {
        let d2 = self.d2();
        let delta = self.delta();
        let block = PolyMatrix::from_fn(delta + 1, delta, |r, j| {
            if j < d2 - 1 {
                self.u_entry(r as i64 - j as i64)
            } else {
                self.v_entry(r as i64 - (j - (d2 - 1)) as i64)
            }
        });
        let minors = block.maximal_minors(1).expect("bordered block shape");
        // minors[k] deletes row k; SRes_j = (-1)^j * minor deleting row delta-j
        (0..=delta)
            .map(|j| {
                let m = &minors[delta - j].1;
                if j % 2 == 0 {
                    m.clone()
                } else {
                    -m
                }
            })
            .collect()
    }

    /// First W index free in the coefficients; the D(nu)/D1(nu) auxiliary
    /// form h uses W_base .. W_(base + delta - 2 nu + 1).
    pub fn w_base(&self) -> u32 {
        let mut base = 0u32;
        for c in self.u.iter().chain(&self.v) {
            for v in c.vars() {
                if let Var::W(i) = v {
                    base = base.max(i + 1);
                }
            }
        }
        base
    }

    fn symbolic_h(&self, nu: usize) -> Vec<MultiPoly> {
        let base = self.w_base();
        (0..=self.delta() - 2 * nu + 1)
            .map(|i| MultiPoly::var(Var::W(base + i as u32)))
            .collect()
    }

    /// The determinant D(nu) of the bordered matrix with d2-nu U-columns,
    /// d1-nu V-columns, nu+1 columns of the generic form h of degree
    /// delta-2nu+1, and a last row carrying the X-monomials of degree nu
    /// under the h-block. A form of X-degree nu, linear in each W block;
    /// D(0) = Res(f1, f2).
    pub fn d_determinant(&self, nu: usize) -> Result<MultiPoly, ResultantError> {
        let h = self.symbolic_h(nu);
        self.d_determinant_with_h(nu, &h)
    }

    pub fn d_determinant_with_h(
        &self,
        nu: usize,
        h: &[MultiPoly],
    ) -> Result<MultiPoly, ResultantError> {
        let (d1, d2) = (self.d1(), self.d2());
        let delta = self.delta();
        if nu > d1 - 1 {
            return Err(ResultantError::NuOutOfRange);
        }
        assert_eq!(h.len(), delta - 2 * nu + 2, "h must have degree delta - 2 nu + 1");
        let h_entry = |r: i64| -> MultiPoly {
            if r >= 0 && (r as usize) < h.len() {
                h[r as usize].clone()
            } else {
                MultiPoly::zero()
            }
        };
        let n = delta - nu + 3;
        let cu = d2 - nu;
        let cv = d1 - nu;
        let m = PolyMatrix::from_fn(n, n, |r, j| {
            if r == n - 1 {
                // bottom row: zeros under U and V, X-monomials under h
                if j >= cu + cv {
                    let k = (j - cu - cv) as u32;
                    MultiPoly::monomial(
                        Scalar::one(),
                        &[(Var::X1, nu as u32 - k), (Var::X2, k)],
                    )
                } else {
                    MultiPoly::zero()
                }
            } else if j < cu {
                self.u_entry(r as i64 - j as i64)
            } else if j < cu + cv {
                self.v_entry(r as i64 - (j - cu) as i64)
            } else {
                h_entry(r as i64 - (j - cu - cv) as i64)
            }
        });
        Ok(m.det().expect("square D matrix"))
    }

    /// Coefficient vector of the determinant D1(nu) along its T-column:
    /// entry i is the coefficient of T_i, so D1(0) recovers the
    /// subresultant expansion sum_i SRes_(delta-i) T_i.
    pub fn d1_coefficients(&self, nu: usize) -> Result<Vec<MultiPoly>, ResultantError> {
        let h = self.symbolic_h(nu);
        self.d1_coefficients_with_h(nu, &h)
    }

    pub fn d1_coefficients_with_h(
        &self,
        nu: usize,
        h: &[MultiPoly],
    ) -> Result<Vec<MultiPoly>, ResultantError> {
        let (d1, d2) = (self.d1(), self.d2());
        let delta = self.delta();
        if nu > d1 - 1 {
            return Err(ResultantError::NuOutOfRange);
        }
        assert_eq!(h.len(), delta - 2 * nu + 2, "h must have degree delta - 2 nu + 1");
        let h_entry = |r: i64| -> MultiPoly {
            if r >= 0 && (r as usize) < h.len() {
                h[r as usize].clone()
            } else {
                MultiPoly::zero()
            }
        };
        let n = delta - nu + 1;
        let cu = d2 - nu - 1;
        let cv = d1 - nu - 1;
        // the block without the T-column, keeping the column order
        // U | V | W of the display
        let block = PolyMatrix::from_fn(n, n - 1, |r, j| {
            if j < cu {
                self.u_entry(r as i64 - j as i64)
            } else if j < cu + cv {
                self.v_entry(r as i64 - (j - cu) as i64)
            } else {
                h_entry(r as i64 - (j - cu - cv) as i64)
            }
        });
        let minors = block.maximal_minors(1).expect("D1 block shape");
        // the T-column sits at index cu + cv in the display; cofactor
        // signs for entry (i, cu+cv) of the bordered matrix
        let tcol = cu + cv;
        Ok((0..n)
            .map(|i| {
                let m = &minors[i].1;
                if (i + tcol) % 2 == 0 {
                    m.clone()
                } else {
                    -m
                }
            })
            .collect())
    }

    /// The W-monomial decomposition D(nu) = sum_(|beta| = nu) D_beta W^beta.
    /// Keys are exponent vectors over the h-block variables
    /// W_base .. W_(base+delta-2nu+1); each D_beta is an inertia form of
    /// X-degree nu.
    pub fn d_beta_coefficients(
        &self,
        nu: usize,
    ) -> Result<BTreeMap<Vec<u32>, MultiPoly>, ResultantError> {
        if nu != 0 && nu + 2 > self.d1() {
            return Err(ResultantError::NuOutOfRange);
        }
        let d = self.d_determinant(nu)?;
        let base = self.w_base();
        let wvars: Vec<Var> =
            (0..=self.delta() - 2 * nu + 1).map(|i| Var::W(base + i as u32)).collect();
        Ok(d.coefficients_by(&wvars))
    }
}

pub fn assemble_binary(coeffs: &[MultiPoly]) -> MultiPoly {
    let d = coeffs.len() - 1;
    let mut acc = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let m = MultiPoly::monomial(Scalar::one(), &[(Var::X1, (d - k) as u32), (Var::X2, k as u32)]);
        acc = &acc + &(c * &m);
    }
    acc
}

/// Congruence check for the T-derivative of a resultant:
/// dRes(g1,g2)/dT = (-1)^d1 * J(x) * SRes_0(g1,g2) modulo
/// (g1(x,1), g2(x,1)), where J is the 2x2 determinant of the T- and
/// X1-partials evaluated at (x, 1). The sign differs from the classical
/// (-1)^(d1+d2) statement because this crate's bordered-determinant
/// subresultants carry a (-1)^d2 factor against that source's
/// convention. Membership is decided by an exact linear solve on
/// bounded-degree cofactors.
pub fn resultant_derivative_congruence(
    g1: &MultiPoly,
    g2: &MultiPoly,
    param: Var,
) -> Result<bool, ResultantError> {
    let fp = FormPair::new(g1, g2)?;
    let (d1, d2) = (fp.d1(), fp.d2());
    if d1 < 2 {
        return Err(ResultantError::BadDegrees("congruence requires degrees >= 2".into()));
    }
    let res = fp.resultant();
    let sres0 = fp.subresultants()[0].clone();
    let x = MultiPoly::var(Var::AffX);
    let one = MultiPoly::one();
    let at_x1 = |f: &MultiPoly| f.substitute_many(&[(Var::X1, x.clone()), (Var::X2, one.clone())]);
    let j = {
        let a = at_x1(&g1.derivative(param));
        let b = at_x1(&g2.derivative(param));
        let c = at_x1(&g1.derivative(Var::X1));
        let d = at_x1(&g2.derivative(Var::X1));
        &(&a * &d) - &(&b * &c)
    };
    let _ = d2;
    let sign = if d1 % 2 == 0 { 1 } else { -1 };
    let lhs = res.derivative(param);
    let rhs = &(&j * &at_x1(&sres0)) * &MultiPoly::from_int(sign);
    let target = &lhs - &rhs;
    if target.is_zero() {
        return Ok(true);
    }
    let gx1 = at_x1(g1);
    let gx2 = at_x1(g2);
    // bounded-degree cofactors in x and the parameter
    let dx = target
        .degree_in(&[Var::AffX])
        .max(gx1.degree_in(&[Var::AffX]) + gx2.degree_in(&[Var::AffX]));
    let dt = target.degree_in(&[param]);
    let monos = bounded_monomials(&[(Var::AffX, dx), (param, dt)]);
    Ok(crate::inertia::express_in_ideal(&target, &[(&gx1, &monos), (&gx2, &monos)]).is_some())
}

/// All monomials with exponent of each listed variable at most the bound.
pub fn bounded_monomials(bounds: &[(Var, u32)]) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::one()];
    for &(v, bound) in bounds {
        let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
        for p in &out {
            for e in 0..=bound {
                next.push(p * &MultiPoly::monomial(Scalar::one(), &[(v, e)]));
            }
        }
        out = next;
    }
    out
}
