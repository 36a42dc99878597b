//! Mu-bases of plane rational parametrizations via graded syzygy kernels,
//! and the degree of the parametrization map from generic-fiber gcds.

use crate::biform::BiForm;
use crate::linalg::QMatrix;
use crate::poly::{monomials_of_degree, MultiPoly};
use crate::resultants::FormPair;
use crate::scalar::Scalar;
use crate::univariate::{degree as uni_degree, gcd_bivariate};
use crate::variable::{Var, T_VARS, X_VARS};

#[derive(Clone, Debug)]
pub enum MuBasisError {
    /// some g_i is not homogeneous in X1, X2, or involves other variables
    NotBinaryForm,
    UnequalDegrees,
    /// all g_i zero, or the image degenerates to a line
    Degenerate,
    /// gcd(g1, g2, g3) is not a constant
    ImproperParametrization,
    /// curve analysis needs degree at least 2
    DegreeTooSmall,
    Internal(String),
}

impl std::fmt::Display for MuBasisError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MuBasisError::NotBinaryForm => write!(f, "parametrization entries must be binary forms in X1, X2"),
            MuBasisError::UnequalDegrees => write!(f, "g1, g2, g3 must share one degree"),
            MuBasisError::Degenerate => write!(f, "degenerate parametrization"),
            MuBasisError::ImproperParametrization => write!(f, "gcd is not constant"),
            MuBasisError::DegreeTooSmall => write!(f, "degree must be at least 2"),
            MuBasisError::Internal(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl std::error::Error for MuBasisError {}

/// A triple (g1 : g2 : g3) of binary forms of a common degree d >= 2 with
/// constant gcd.
#[derive(Clone, Debug)]
pub struct Parametrization {
    g: [MultiPoly; 3],
    d: usize,
}

impl Parametrization {
    pub fn new(g1: MultiPoly, g2: MultiPoly, g3: MultiPoly) -> Result<Self, MuBasisError> {
        let g = [g1, g2, g3];
        if g.iter().all(|p| p.is_zero()) {
            return Err(MuBasisError::Degenerate);
        }
        let mut d = None;
        for p in &g {
            if p.vars().iter().any(|v| !X_VARS.contains(v)) {
                return Err(MuBasisError::NotBinaryForm);
            }
            let k = p.homogeneous_degree_in(&X_VARS).ok_or(MuBasisError::NotBinaryForm)?;
            if p.is_zero() {
                continue;
            }
            match d {
                None => d = Some(k),
                Some(dd) if dd != k => return Err(MuBasisError::UnequalDegrees),
                _ => {}
            }
        }
        let d = d.unwrap() as usize;
        if d < 2 {
            return Err(MuBasisError::DegreeTooSmall);
        }
        let phi = Parametrization { g, d };
        if phi.gcd_degree() > 0 {
            return Err(MuBasisError::ImproperParametrization);
        }
        Ok(phi)
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn g(&self) -> &[MultiPoly; 3] {
        &self.g
    }

    /// Degree of gcd(g1, g2, g3) as a binary form: the univariate gcd of
    /// the g_i(t, 1) plus the common power of X2.
    fn gcd_degree(&self) -> usize {
        let mut finite = MultiPoly::zero();
        let mut x2_mult = usize::MAX;
        for p in &self.g {
            if p.is_zero() {
                continue;
            }
            let u = self.dehomog_one(p);
            x2_mult = x2_mult.min(self.d - uni_degree(&u, Var::ParamT));
            finite = if finite.is_zero() {
                u
            } else {
                crate::univariate::uni_gcd(&finite, &u, Var::ParamT)
            };
        }
        uni_degree(&finite, Var::ParamT) + x2_mult
    }

    fn dehomog_one(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute_many(&[(Var::X1, MultiPoly::var(Var::ParamT)), (Var::X2, MultiPoly::one())])
    }

    /// The affine parametrization [g1(t,1), g2(t,1), g3(t,1)].
    pub fn affine(&self) -> [MultiPoly; 3] {
        [
            self.dehomog_one(&self.g[0]),
            self.dehomog_one(&self.g[1]),
            self.dehomog_one(&self.g[2]),
        ]
    }

    /// Image point of a rational parameter, as a coprime integer triple;
    /// `None` when all coordinates vanish (cannot happen for constant gcd).
    pub fn point_at(&self, t: &Scalar) -> Option<Vec<Scalar>> {
        let aff = self.affine();
        let vals: Vec<Scalar> = aff
            .iter()
            .map(|p| {
                if p.is_zero() {
                    Scalar::zero()
                } else {
                    p.eval_univariate(Var::ParamT, t).expect("univariate")
                }
            })
            .collect();
        if vals.iter().all(|v| v.is_zero()) {
            return None;
        }
        Some(crate::linalg::normalize_vector(vals))
    }

    /// Composes a T-form with the affine parametrization.
    pub fn pullback(&self, form: &MultiPoly) -> MultiPoly {
        let [a, b, c] = self.affine();
        form.substitute_many(&[(Var::T1, a), (Var::T2, b), (Var::T3, c)])
    }

    /// Reparametrizes by an invertible 2x2 integer matrix acting on
    /// (X1, X2).
    pub fn reparametrized(&self, m: [[i64; 2]; 2]) -> Result<Self, MuBasisError> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det == 0 {
            return Err(MuBasisError::Internal("singular reparametrization".into()));
        }
        let x1 = &(&MultiPoly::var(Var::X1) * &MultiPoly::from_int(m[0][0]))
            + &(&MultiPoly::var(Var::X2) * &MultiPoly::from_int(m[0][1]));
        let x2 = &(&MultiPoly::var(Var::X1) * &MultiPoly::from_int(m[1][0]))
            + &(&MultiPoly::var(Var::X2) * &MultiPoly::from_int(m[1][1]));
        let sub = |p: &MultiPoly| p.substitute_many(&[(Var::X1, x1.clone()), (Var::X2, x2.clone())]);
        Parametrization::new(sub(&self.g[0]), sub(&self.g[1]), sub(&self.g[2]))
    }
}

/// Basis of the degree-k syzygies {(a, b, c) : a g1 + b g2 + c g3 = 0},
/// as coefficient-normalized kernel vectors of the graded coefficient
/// matrix.
pub fn syzygies_of_degree(phi: &Parametrization, k: usize) -> Vec<[MultiPoly; 3]> {
    syzygy_kernel(phi, k)
        .into_iter()
        .map(|v| vector_to_triple(&v, k))
        .collect()
}

fn syzygy_kernel(phi: &Parametrization, k: usize) -> Vec<Vec<Scalar>> {
    let d = phi.d;
    let rows = d + k + 1;
    let cols = 3 * (k + 1);
    let row_monos = monomials_of_degree(&X_VARS, (d + k) as u32);
    let mut m = QMatrix::zero(rows, cols);
    for (which, g) in phi.g.iter().enumerate() {
        for j in 0..=k {
            let shift = MultiPoly::monomial(
                Scalar::one(),
                &[(Var::X1, (k - j) as u32), (Var::X2, j as u32)],
            );
            let prod = &shift * g;
            let col = which * (k + 1) + j;
            for (r, mono) in row_monos.iter().enumerate() {
                // coefficient of the row monomial in shift * g
                let c = coefficient_of(&prod, mono);
                m.set(r, col, c);
            }
        }
    }
    m.nullspace()
}

fn coefficient_of(p: &MultiPoly, mono: &MultiPoly) -> Scalar {
    let (_, m) = mono.leading().expect("monomial");
    let by = p.coefficients_by(&X_VARS);
    let key: Vec<u32> = X_VARS
        .iter()
        .map(|v| m.iter().find(|(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0))
        .collect();
    by.get(&key).and_then(|c| c.as_scalar()).unwrap_or_else(Scalar::zero)
}

fn vector_to_triple(v: &[Scalar], k: usize) -> [MultiPoly; 3] {
    let mut out = [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()];
    for which in 0..3 {
        let mut acc = MultiPoly::zero();
        for j in 0..=k {
            let c = v[which * (k + 1) + j].clone();
            if !c.is_zero() {
                acc = &acc
                    + &MultiPoly::monomial(c, &[(Var::X1, (k - j) as u32), (Var::X2, j as u32)]);
            }
        }
        out[which] = acc;
    }
    out
}

fn triple_to_biform(t: &[MultiPoly; 3]) -> BiForm {
    let p = &(&(&t[0] * &MultiPoly::var(Var::T1)) + &(&t[1] * &MultiPoly::var(Var::T2)))
        + &(&t[2] * &MultiPoly::var(Var::T3));
    BiForm::new(p).expect("syzygy triple is bihomogeneous")
}

/// T-linear components (p1, p2, p3) of a moving line p = sum p_i T_i.
pub fn t_components(b: &BiForm) -> [MultiPoly; 3] {
    let by = b.poly().coefficients_by(&T_VARS);
    let pick = |key: [u32; 3]| by.get(&key.to_vec()).cloned().unwrap_or_else(MultiPoly::zero);
    [pick([1, 0, 0]), pick([0, 1, 0]), pick([0, 0, 1])]
}

/// A validated mu-basis (p, q) with deg p = mu <= deg q = d - mu.
#[derive(Clone, Debug)]
pub struct MuBasis {
    p: BiForm,
    q: BiForm,
    mu: usize,
    d: usize,
}

impl MuBasis {
    pub fn p(&self) -> &BiForm {
        &self.p
    }

    pub fn q(&self) -> &BiForm {
        &self.q
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn parametrization_degree(&self) -> usize {
        self.d
    }

    /// Coefficient forms U_0 .. U_mu of p (linear in T).
    pub fn u_forms(&self) -> Vec<MultiPoly> {
        self.p.poly().binary_coeffs(self.mu).expect("p is an X-form")
    }

    /// Coefficient forms V_0 .. V_(d-mu) of q.
    pub fn v_forms(&self) -> Vec<MultiPoly> {
        self.q.poly().binary_coeffs(self.d - self.mu).expect("q is an X-form")
    }

    pub fn form_pair(&self) -> FormPair {
        FormPair::new(self.p.poly(), self.q.poly()).expect("mu-basis is a valid form pair")
    }
}

fn cross_product(p: &[MultiPoly; 3], q: &[MultiPoly; 3]) -> [MultiPoly; 3] {
    [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ]
}

/// Checks cross(p, q) = c * (g1, g2, g3) for a nonzero constant c and
/// returns c.
fn cross_matches(phi: &Parametrization, p: &[MultiPoly; 3], q: &[MultiPoly; 3]) -> Option<Scalar> {
    let cross = cross_product(p, q);
    let mut c: Option<Scalar> = None;
    for i in 0..3 {
        if phi.g[i].is_zero() {
            if !cross[i].is_zero() {
                return None;
            }
            continue;
        }
        let quot = cross[i].exact_divide(&phi.g[i]).ok()?;
        let s = quot.as_scalar()?;
        match &c {
            None => c = Some(s),
            Some(prev) if *prev != s => return None,
            _ => {}
        }
    }
    c.filter(|s| !s.is_zero())
}

/// Computes a mu-basis: p is the first kernel-basis vector at the minimal
/// degree mu, q the lexicographically smallest normalized degree-(d-mu)
/// kernel vector making the cross-product identity hold; both
/// content-normalized. The construction re-checks the syzygy and
/// cross-product identities before returning.
pub fn mu_basis(phi: &Parametrization) -> Result<MuBasis, MuBasisError> {
    let d = phi.d;
    if !syzygy_kernel(phi, 0).is_empty() {
        // a constant syzygy flattens the image to a line
        return Err(MuBasisError::Degenerate);
    }
    let mut mu = None;
    for k in 1..=d / 2 {
        if !syzygy_kernel(phi, k).is_empty() {
            mu = Some(k);
            break;
        }
    }
    let mu = mu.ok_or_else(|| {
        MuBasisError::Internal("no syzygy of degree at most d/2".into())
    })?;
    let p_vec = &syzygy_kernel(phi, mu)[0];
    let p_triple = vector_to_triple(p_vec, mu);

    let mut candidates = syzygy_kernel(phi, d - mu);
    candidates.sort();
    let mut chosen = None;
    for cand in &candidates {
        let q_triple = vector_to_triple(cand, d - mu);
        if let Some(c) = cross_matches(phi, &p_triple, &q_triple) {
            chosen = Some((q_triple, c));
            break;
        }
    }
    let (q_triple, _) =
        chosen.ok_or_else(|| MuBasisError::Internal("no partner syzygy passes the cross-product test".into()))?;

    let p = triple_to_biform(&p_triple).primitive();
    let q = triple_to_biform(&q_triple).primitive();

    let mb = MuBasis { p, q, mu, d };

    // construction-time invariants: syzygy property and cross product
    let pt = t_components(&mb.p);
    let qt = t_components(&mb.q);
    for t in [&pt, &qt] {
        let mut acc = MultiPoly::zero();
        for i in 0..3 {
            acc = &acc + &(&t[i] * &phi.g[i]);
        }
        if !acc.is_zero() {
            return Err(MuBasisError::Internal("syzygy identity failed".into()));
        }
    }
    if cross_matches(phi, &pt, &qt).is_none() {
        return Err(MuBasisError::Internal("cross-product identity failed".into()));
    }
    Ok(mb)
}

/// deg(phi): the degree in t of the gcd over Q(s) of the three cross
/// polynomials g_i(t,1) g_j(s,1) - g_j(t,1) g_i(s,1); equals the generic
/// fiber cardinality and divides d.
pub fn degree_of_map(phi: &Parametrization) -> usize {
    let [a, b, c] = phi.affine();
    let at_s = |p: &MultiPoly| p.substitute(Var::ParamT, &MultiPoly::var(Var::ParamS));
    let cross = |f: &MultiPoly, g: &MultiPoly| -> MultiPoly { &(f * &at_s(g)) - &(g * &at_s(f)) };
    let h12 = cross(&a, &b);
    let h13 = cross(&a, &c);
    let h23 = cross(&b, &c);
    let mut g = MultiPoly::zero();
    for h in [h12, h13, h23] {
        if h.is_zero() {
            continue;
        }
        g = if g.is_zero() { h } else { gcd_bivariate(&g, &h, Var::ParamT) };
    }
    if g.is_zero() {
        // all cross polynomials vanish: the map is constant, excluded by
        // the parametrization invariants
        return phi.d;
    }
    uni_degree(&g, Var::ParamT)
}

/// Implicit equation: Res(p, q) = alpha * C^(deg phi) with C primitive of
/// positive leading coefficient. For deg phi > 1 the primitive part must
/// be an exact power; failure is an internal inconsistency.
pub fn implicit_equation(mb: &MuBasis, deg_phi: usize) -> Result<(MultiPoly, Scalar), MuBasisError> {
    let res = mb.form_pair().resultant();
    let (alpha, rhat) = res
        .content_primitive()
        .map_err(|_| MuBasisError::Internal("resultant of a mu-basis vanished".into()))?;
    if deg_phi == 1 {
        return Ok((rhat, alpha));
    }
    let c = rhat
        .nth_root(deg_phi as u32)
        .map_err(|_| MuBasisError::Internal(format!("Res(p,q) is not an exact {deg_phi}-th power")))?;
    Ok((c, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    pub fn phi_from(strs: [&str; 3]) -> Parametrization {
        let [a, b, c] = strs.map(|s| parse_poly(s).unwrap());
        Parametrization::new(a, b, c).unwrap()
    }

    fn cusp() -> Parametrization {
        phi_from(["X1^2*X2", "X1^3", "X2^3"])
    }

    fn quartic() -> Parametrization {
        phi_from(["X1^4", "X1^3*X2 + X1*X2^3", "X2^4"])
    }

    fn nodal() -> Parametrization {
        phi_from(["X1^2*X2 - X2^3", "X1^3 - X1*X2^2", "X2^3"])
    }

    #[test]
    fn construction_guards() {
        assert!(matches!(
            Parametrization::new(
                parse_poly("X1^2").unwrap(),
                parse_poly("X1*X2").unwrap(),
                parse_poly("X1 + X2").unwrap()
            ),
            Err(MuBasisError::UnequalDegrees)
        ));
        assert!(matches!(
            Parametrization::new(
                parse_poly("X1^3").unwrap(),
                parse_poly("X1^2*X2").unwrap(),
                parse_poly("X1*X2^2").unwrap()
            ),
            Err(MuBasisError::ImproperParametrization)
        ));
        assert!(matches!(
            Parametrization::new(
                parse_poly("X1^3 + X1^2*X2").unwrap(),
                parse_poly("X1*X2^2").unwrap(),
                parse_poly("X1^2*X2").unwrap()
            ),
            Err(MuBasisError::ImproperParametrization)
        ));
    }

    #[test]
    fn syzygies_examples() {
        let s1 = syzygies_of_degree(&cusp(), 1);
        assert_eq!(s1.len(), 1);
        assert_eq!(s1[0][0], parse_poly("X1").unwrap());
        assert_eq!(s1[0][1], parse_poly("-X2").unwrap());
        assert!(s1[0][2].is_zero());

        assert!(syzygies_of_degree(&quartic(), 1).is_empty());

        // degree-d slice contains the X-multiples of both generators
        let sd = syzygies_of_degree(&cusp(), 3);
        assert!(sd.len() >= 2);
    }

    #[test]
    fn mu_basis_cusp() {
        let mb = mu_basis(&cusp()).unwrap();
        assert_eq!(mb.mu(), 1);
        assert_eq!(mb.p().poly(), &parse_poly("T1*X1 - T2*X2").unwrap());
        assert_eq!(mb.q().poly(), &parse_poly("T3*X1^2 - T1*X2^2").unwrap());
    }

    #[test]
    fn quartic_degree2_kernel_is_two_dimensional() {
        // the 7x9 coefficient matrix of degree-2 syzygies has a
        // 2-dimensional kernel
        assert_eq!(syzygies_of_degree(&quartic(), 2).len(), 2);
    }

    #[test]
    fn mu_basis_quartic() {
        let mb = mu_basis(&quartic()).unwrap();
        assert_eq!(mb.mu(), 2);
        assert_eq!((mb.p().xdeg(), mb.q().xdeg()), (2, 2));
        // degree sum is d
        assert_eq!(mb.p().xdeg() + mb.q().xdeg(), 4);
    }

    #[test]
    fn mu_basis_nodal() {
        let mb = mu_basis(&nodal()).unwrap();
        assert_eq!(mb.mu(), 1);
        assert_eq!(mb.p().poly(), &parse_poly("T1*X1 - T2*X2").unwrap());
    }

    #[test]
    fn mu_minimality() {
        let mb = mu_basis(&quartic()).unwrap();
        assert!(syzygies_of_degree(&quartic(), mb.mu() - 1).is_empty());
    }

    #[test]
    fn degree_of_map_examples() {
        assert_eq!(degree_of_map(&cusp()), 1);
        assert_eq!(degree_of_map(&quartic()), 1);
        let double = phi_from(["X1^2*X2^2", "X1^4", "X2^4"]);
        assert_eq!(degree_of_map(&double), 2);
    }

    #[test]
    fn implicit_cusp() {
        let mb = mu_basis(&cusp()).unwrap();
        let (c, _) = implicit_equation(&mb, 1).unwrap();
        assert_eq!(c, parse_poly("T1^3 - T2^2*T3").unwrap());
    }

    #[test]
    fn implicit_nonbirational_square_root() {
        let phi = phi_from(["X1^2*X2^2", "X1^4", "X2^4"]);
        let mb = mu_basis(&phi).unwrap();
        let e = degree_of_map(&phi);
        assert_eq!(e, 2);
        let (c, _) = implicit_equation(&mb, e).unwrap();
        assert_eq!(c, parse_poly("T1^2 - T2*T3").unwrap());
        // reconstruction: Res = alpha * C^e
        let res = mb.form_pair().resultant();
        let (alpha, rhat) = res.content_primitive().unwrap();
        assert_eq!(rhat, c.pow(2));
        assert!(!alpha.is_zero());
    }
}
