//! Adjoint candidates and pencils from subresultants, polar curves, the
//! generalized Taylor resultant locating the singular parameters, branch
//! level adjunction checks, inverse maps, and singularity reports with
//! genus bookkeeping.

use crate::biform::BiForm;
use crate::inertia::{m_matrix, sylvester_form};
use crate::linalg::{normalize_vector, PolyMatrix};
use crate::mubasis::{
    degree_of_map, implicit_equation, mu_basis, t_components, MuBasis, MuBasisError,
    Parametrization,
};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::univariate::{
    degree as uni_degree, rational_roots, root_multiplicity, squarefree_decomposition, uni_gcd,
    uni_rem,
};
use crate::variable::{Var, T_VARS};

#[derive(Clone, Debug)]
pub enum AdjointError {
    /// deg(phi) != 1
    NotBirational,
    /// curves of degree < 3 have no singular point
    NoSingularities,
    ZeroCurve,
    /// the polar-based test needs a base point off the curve
    PointOnCurve,
    /// branch checks require all singular parameters rational
    UnsupportedFixture,
    Mu(MuBasisError),
    Internal(String),
}

impl std::fmt::Display for AdjointError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdjointError::NotBirational => write!(f, "not birational"),
            AdjointError::NoSingularities => write!(f, "no singularities"),
            AdjointError::ZeroCurve => write!(f, "zero curve"),
            AdjointError::PointOnCurve => write!(f, "polar undefined for test: base point lies on the curve"),
            AdjointError::UnsupportedFixture => write!(f, "unsupported fixture: non-rational singular parameters"),
            AdjointError::Mu(e) => write!(f, "{e}"),
            AdjointError::Internal(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl std::error::Error for AdjointError {}

impl From<MuBasisError> for AdjointError {
    fn from(e: MuBasisError) -> Self {
        AdjointError::Mu(e)
    }
}

/// A parametrized curve with its mu-basis, implicit equation and map
/// degree. Construction verifies Res(p, q) = alpha * C^(deg phi) exactly.
#[derive(Clone, Debug)]
pub struct CurveModel {
    phi: Parametrization,
    mb: MuBasis,
    c: MultiPoly,
    alpha: Scalar,
    deg_phi: usize,
}

impl CurveModel {
    pub fn new(phi: Parametrization) -> Result<Self, AdjointError> {
        let mb = mu_basis(&phi)?;
        let deg_phi = degree_of_map(&phi);
        let (c, alpha) = implicit_equation(&mb, deg_phi)?;
        let recon = c.pow(deg_phi as u32).scale(&alpha);
        if recon != mb.form_pair().resultant() {
            return Err(AdjointError::Internal(
                "Res(p,q) != alpha * C^deg(phi) after recovery".into(),
            ));
        }
        Ok(CurveModel { phi, mb, c, alpha, deg_phi })
    }

    pub fn phi(&self) -> &Parametrization {
        &self.phi
    }

    pub fn mu_basis(&self) -> &MuBasis {
        &self.mb
    }

    pub fn implicit(&self) -> &MultiPoly {
        &self.c
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn deg_phi(&self) -> usize {
        self.deg_phi
    }

    pub fn curve_degree(&self) -> usize {
        self.phi.degree() / self.deg_phi
    }

    fn require_birational(&self) -> Result<(), AdjointError> {
        if self.deg_phi != 1 {
            return Err(AdjointError::NotBirational);
        }
        Ok(())
    }

    pub fn eval_curve(&self, point: &[Scalar]) -> Scalar {
        eval_t_form(&self.c, point)
    }
}

pub fn eval_t_form(form: &MultiPoly, point: &[Scalar]) -> Scalar {
    let subs: Vec<(Var, MultiPoly)> = T_VARS
        .iter()
        .zip(point)
        .map(|(&v, s)| (v, MultiPoly::constant(s.clone())))
        .collect();
    form.substitute_many(&subs)
        .as_scalar()
        .expect("T-form evaluates to a scalar")
}

/// The distinguished moving line of X-degree 1: det M_1(p, q) for mu = 1
/// and d >= 4, the Sylvester form sylv_(0,0) for d = 3 (where they agree).
fn degree_one_inertia_form(cm: &CurveModel) -> Result<BiForm, AdjointError> {
    let fp = cm.mb.form_pair();
    let d = cm.phi.degree();
    let poly = if d >= 4 {
        m_matrix(&fp, 1)
            .map_err(|e| AdjointError::Internal(e.to_string()))?
            .det()
            .map_err(|e| AdjointError::Internal(e.to_string()))?
    } else {
        sylvester_form(&fp, (0, 0))
            .map_err(|e| AdjointError::Internal(e.to_string()))?
            .value
    };
    BiForm::new(poly).map_err(|e| AdjointError::Internal(e.to_string()))
}

/// Adjoint curve equations read off the mu-basis: the nonzero
/// subresultants for mu >= 2 (degree d-2), the X-coefficients of the
/// degree-1 inertia form for mu = 1 (degree d-1). Content-normalized.
pub fn adjoint_candidates(cm: &CurveModel) -> Result<Vec<MultiPoly>, AdjointError> {
    cm.require_birational()?;
    if cm.phi.degree() < 3 {
        return Err(AdjointError::NoSingularities);
    }
    if cm.mb.mu() >= 2 {
        Ok(cm
            .mb
            .form_pair()
            .subresultants()
            .into_iter()
            .filter(|s| !s.is_zero())
            .map(|s| s.primitive_part())
            .collect())
    } else {
        let pencil = degree_one_inertia_form(cm)?;
        let coeffs = pencil.poly().binary_coeffs(1).map_err(|e| AdjointError::Internal(e.to_string()))?;
        Ok(coeffs.into_iter().filter(|c| !c.is_zero()).map(|c| c.primitive_part()).collect())
    }
}

/// Adjoint pencils X1 D1(T) + X2 D2(T): det M_1 (or sylv_(0,0)) for
/// mu = 1; X1 SRes_i - X2 SRes_(i+1) for mu >= 2.
pub fn adjoint_pencils(cm: &CurveModel) -> Result<Vec<BiForm>, AdjointError> {
    cm.require_birational()?;
    let d = cm.phi.degree();
    if d < 3 {
        return Err(AdjointError::NoSingularities);
    }
    if cm.mb.mu() == 1 {
        return Ok(vec![degree_one_inertia_form(cm)?]);
    }
    let sres = cm.mb.form_pair().subresultants();
    let x1 = MultiPoly::var(Var::X1);
    let x2 = MultiPoly::var(Var::X2);
    let mut out = Vec::new();
    for i in 0..=d - 3 {
        let pencil = &(&x1 * &sres[i]) - &(&x2 * &sres[i + 1]);
        if pencil.is_zero() {
            continue;
        }
        out.push(BiForm::new(pencil).map_err(|e| AdjointError::Internal(e.to_string()))?);
    }
    Ok(out)
}

/// The generalized Taylor resultant Delta(t) = SRes_0(p,q)(g(t,1)),
/// content-normalized; deg Delta <= (d-1)(d-2) with equality when every
/// singular parameter is finite.
pub fn d_resultant(cm: &CurveModel) -> Result<MultiPoly, AdjointError> {
    cm.require_birational()?;
    let sres0 = cm.mb.form_pair().subresultants()[0].clone();
    let pulled = cm.phi.pullback(&sres0);
    if pulled.is_zero() {
        return Err(AdjointError::Internal("SRes_0 vanishes along the curve".into()));
    }
    let d = cm.phi.degree();
    let delta = pulled.primitive_part();
    if uni_degree(&delta, Var::ParamT) > (d - 1) * (d - 2) {
        return Err(AdjointError::Internal("Delta(t) exceeds its degree bound".into()));
    }
    Ok(delta)
}

/// Polar curve of C with respect to a base point: the linear combination
/// of the T-partials, of degree deg C - 1.
pub fn polar_curve(c: &MultiPoly, q: &[Scalar]) -> Result<MultiPoly, AdjointError> {
    if c.is_zero() {
        return Err(AdjointError::ZeroCurve);
    }
    let mut acc = MultiPoly::zero();
    for (i, v) in T_VARS.iter().enumerate() {
        acc = &acc + &c.derivative(*v).scale(&q[i]);
    }
    Ok(acc)
}

/// Per-branch data for the polar adjunction test; `None` orders mean the
/// composed polynomial vanished identically (infinite order).
#[derive(Clone, Debug)]
pub struct BranchCheck {
    pub parameter: Scalar,
    pub point: Vec<Scalar>,
    pub ord_d: Option<u32>,
    pub ord_polar: Option<u32>,
    pub ord_line: Option<u32>,
    pub holds: bool,
    pub equality: bool,
}

/// Tests mult(γ, D) >= mult(γ, P_q) - mult(γ, L_q) + 1 on every branch
/// through a rational singular parameter, for a curve D given by a
/// T-form and a rational base point q off C.
pub fn branch_adjoint_check(
    cm: &CurveModel,
    d_form: &MultiPoly,
    q: &[Scalar],
) -> Result<(bool, Vec<BranchCheck>), AdjointError> {
    cm.require_birational()?;
    if cm.eval_curve(q).is_zero() {
        return Err(AdjointError::PointOnCurve);
    }
    let delta = d_resultant(cm)?;
    let roots = rational_roots(&delta, Var::ParamT).map_err(|e| AdjointError::Internal(e.to_string()))?;
    let total: u32 = roots.iter().map(|(_, m)| m).sum();
    if (total as usize) < uni_degree(&delta, Var::ParamT) {
        return Err(AdjointError::UnsupportedFixture);
    }
    let polar = polar_curve(&cm.c, q)?;
    let mut checks = Vec::new();
    let mut all = true;
    for (t, _) in roots {
        let point = cm
            .phi
            .point_at(&t)
            .ok_or_else(|| AdjointError::Internal("parameter has no image".into()))?;
        // the line through the singular point and q
        let line = line_through(&point, q)
            .ok_or_else(|| AdjointError::Internal("degenerate line".into()))?;
        let ord = |form: &MultiPoly| -> Option<u32> {
            let pulled = cm.phi.pullback(form);
            root_multiplicity(&pulled, Var::ParamT, &t)
        };
        let ord_d = ord(d_form);
        let ord_polar = ord(&polar);
        let ord_line = ord(&line);
        let (holds, equality) = match (ord_d, ord_polar, ord_line) {
            (None, _, _) => (true, false),
            (_, None, _) => (false, false),
            (Some(a), Some(b), None) => (true, a == 0 && b == 0),
            (Some(a), Some(b), Some(c)) => {
                let rhs = b as i64 - c as i64 + 1;
                ((a as i64) >= rhs, a as i64 == rhs)
            }
        };
        all &= holds;
        checks.push(BranchCheck { parameter: t, point, ord_d, ord_polar, ord_line, holds, equality });
    }
    Ok((all, checks))
}

fn line_through(p: &[Scalar], q: &[Scalar]) -> Option<MultiPoly> {
    let cross = [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ];
    if cross.iter().all(|c| c.is_zero()) {
        return None;
    }
    let mut acc = MultiPoly::zero();
    for (c, v) in cross.iter().zip(T_VARS) {
        acc = &acc + &MultiPoly::var(v).scale(c);
    }
    Some(acc)
}

/// An inverse of the parametrization on the curve: T-forms (a, b) with
/// a(phi(t)) - orientation * t * b(phi(t)) = 0 identically.
#[derive(Clone, Debug)]
pub struct InverseMap {
    pub a: MultiPoly,
    pub b: MultiPoly,
    /// +1 or -1; the sign making the relation hold
    pub orientation: i64,
    /// subresultant index used (mu >= 2), or None for the mu = 1 fallback
    pub sres_index: Option<usize>,
}

pub fn inverse_map(cm: &CurveModel) -> Result<InverseMap, AdjointError> {
    cm.require_birational()?;
    let (a, b, idx) = if cm.mb.mu() >= 2 {
        let sres = cm.mb.form_pair().subresultants();
        let i = sres
            .iter()
            .position(|s| !s.is_zero())
            .ok_or_else(|| AdjointError::Internal("all subresultants vanish, contradicting birationality".into()))?;
        if i + 1 >= sres.len() {
            return Err(AdjointError::Internal("no consecutive nonzero subresultant pair".into()));
        }
        (sres[i + 1].clone(), sres[i].clone(), Some(i))
    } else {
        // p = U0 X1 + U1 X2 vanishes on the curve: (X1 : X2) = (-U1 : U0)
        let u = cm.mb.u_forms();
        (-&u[1], u[0].clone(), None)
    };
    let t = MultiPoly::var(Var::ParamT);
    let pa = cm.phi.pullback(&a);
    let pb = cm.phi.pullback(&b);
    for orientation in [1i64, -1] {
        let relation = &pa - &(&t * &pb).scale(&Scalar::from_int(orientation));
        if relation.is_zero() {
            return Ok(InverseMap { a, b, orientation, sres_index: idx });
        }
    }
    Err(AdjointError::Internal("inverse relation fails for both orientations".into()))
}

// ---- singularity report ----

#[derive(Clone, Debug)]
pub struct Cluster {
    /// squarefree polynomial whose roots are the parameters of the cluster
    pub factor: MultiPoly,
    /// rational parameters, when any
    pub parameters: Vec<Scalar>,
    /// total multiplicity mass in Delta
    pub epsilon: u32,
    /// common rational image point, when identified
    pub point: Option<Vec<Scalar>>,
    /// multiplicity of C at the point, when computable
    pub multiplicity: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub dres: MultiPoly,
    pub gamma: Scalar,
    pub squarefree: Vec<(MultiPoly, u32)>,
    pub total_degree: usize,
    pub expected_degree: usize,
    pub clusters: Vec<Cluster>,
    /// (d-1)(d-2)/2
    pub genus_lhs: u32,
    /// twice the accounted singularity mass: sum of m_p(m_p - 1) over
    /// resolved points plus the epsilon of unresolved clusters
    pub accounted_twice: u32,
    pub balanced: bool,
}

/// Order of vanishing of a T-form at a rational projective point:
/// translate into an affine chart at the point and take the lowest total
/// degree.
pub fn order_at_point(form: &MultiPoly, point: &[Scalar]) -> u32 {
    assert!(!form.is_zero(), "order of the zero form");
    // prefer the T3 = 1 chart, then T2, then T1
    let j = if !point[2].is_zero() {
        2
    } else if !point[1].is_zero() {
        1
    } else {
        0
    };
    let scale = point[j].recip();
    let mut subs: Vec<(Var, MultiPoly)> = Vec::new();
    for (i, v) in T_VARS.iter().enumerate() {
        if i == j {
            subs.push((*v, MultiPoly::one()));
        } else {
            let a = &point[i] * &scale;
            subs.push((*v, &MultiPoly::var(*v) + &MultiPoly::constant(a)));
        }
    }
    let local = form.substitute_many(&subs);
    let others: Vec<Var> = T_VARS.iter().copied().filter(|v| *v != T_VARS[j]).collect();
    local
        .terms()
        .map(|(_, mono)| {
            mono.iter()
                .filter(|(v, _)| others.contains(v))
                .map(|(_, e)| *e)
                .sum::<u32>()
        })
        .min()
        .unwrap_or(0)
}

/// Residues of the affine parametrization modulo a squarefree factor
/// share a one-dimensional span exactly when every root maps to one
/// rational point; returns that point.
fn common_rational_image(h: &MultiPoly, phi: &Parametrization) -> Option<Vec<Scalar>> {
    let residues: Vec<MultiPoly> =
        phi.affine().iter().map(|g| uni_rem(g, h, Var::ParamT)).collect();
    let base = residues.iter().find(|r| !r.is_zero())?;
    let mut coords = Vec::with_capacity(3);
    for r in &residues {
        if r.is_zero() {
            coords.push(Scalar::zero());
            continue;
        }
        // candidate ratio from the leading coefficients, verified exactly
        let c = &r.leading_coefficient() / &base.leading_coefficient();
        if &r.clone() - &base.scale(&c) != MultiPoly::zero() {
            return None;
        }
        coords.push(c);
    }
    Some(normalize_vector(coords))
}

/// Splits a squarefree factor into pieces mapping to single rational
/// points, via rational roots of Res_t(h, g_a - c g_b) in the ratio
/// parameter c; returns (resolved pieces with points, unresolved pieces).
fn split_rational_image(
    f: &MultiPoly,
    phi: &Parametrization,
) -> (Vec<(MultiPoly, Vec<Scalar>)>, Vec<MultiPoly>) {
    let mut resolved = Vec::new();
    let mut unresolved = Vec::new();
    let mut work = vec![f.clone()];
    let aff = phi.affine();
    'outer: while let Some(w) = work.pop() {
        if uni_degree(&w, Var::ParamT) == 0 {
            continue;
        }
        if let Some(p) = common_rational_image(&w, phi) {
            resolved.push((w, p));
            continue;
        }
        for a in 0..3 {
            for b in 0..3 {
                if a == b || aff[b].is_zero() {
                    continue;
                }
                for c in candidate_ratios(&w, &aff[a], &aff[b]) {
                    let probe = &aff[a] - &aff[b].scale(&c);
                    let h = uni_gcd(&w, &probe, Var::ParamT);
                    let dh = uni_degree(&h, Var::ParamT);
                    if dh > 0 && dh < uni_degree(&w, Var::ParamT) {
                        let rest = w.exact_divide(&h).expect("gcd divides");
                        work.push(h);
                        work.push(rest);
                        continue 'outer;
                    }
                }
            }
        }
        unresolved.push(w);
    }
    (resolved, unresolved)
}

/// Rational values c for which g_a - c g_b shares a root with w: the
/// rational roots of the Sylvester resultant in t of (w, g_a - c g_b),
/// with c carried by the auxiliary parameter variable s.
fn candidate_ratios(w: &MultiPoly, ga: &MultiPoly, gb: &MultiPoly) -> Vec<Scalar> {
    let c = MultiPoly::var(Var::ParamS);
    let pencil = ga - &(gb * &c);
    let dw = uni_degree(w, Var::ParamT);
    let dp = uni_degree(&pencil, Var::ParamT);
    if dw == 0 || dp == 0 {
        return Vec::new();
    }
    // descending coefficient lists for the Sylvester layout
    let desc = |p: &MultiPoly| -> Vec<MultiPoly> {
        let mut c = p.coeffs_in(Var::ParamT);
        c.reverse();
        c
    };
    let wc = desc(w);
    let pc = desc(&pencil);
    let n = dw + dp;
    // Sylvester matrix of (w, pencil) in t over Q[s]
    let m = PolyMatrix::from_fn(n, n, |r, j| {
        let (list, off) = if j < dp { (&wc, j) } else { (&pc, j - dp) };
        let k = r as i64 - off as i64;
        if k >= 0 && (k as usize) < list.len() {
            list[k as usize].clone()
        } else {
            MultiPoly::zero()
        }
    });
    let res = match m.det() {
        Ok(d) => d,
        Err(_) => return Vec::new(),
    };
    if res.is_zero() {
        return Vec::new();
    }
    match rational_roots(&res, Var::ParamS) {
        Ok(roots) => roots.into_iter().map(|(r, _)| r).collect(),
        Err(_) => Vec::new(),
    }
}

/// Full singularity analysis from the D-resultant.
pub fn singularity_report(cm: &CurveModel) -> Result<SingularityReport, AdjointError> {
    let d = cm.phi.degree();
    let delta = d_resultant(cm)?;
    let (gamma, squarefree) = squarefree_decomposition(&delta, Var::ParamT)
        .map_err(|e| AdjointError::Internal(e.to_string()))?;
    let total_degree = uni_degree(&delta, Var::ParamT);
    let expected_degree = (d - 1) * (d - 2);

    // gather (point -> cluster data) for resolved parameters
    struct Piece {
        factor: MultiPoly,
        parameters: Vec<Scalar>,
        epsilon: u32,
        point: Vec<Scalar>,
    }
    let mut resolved: Vec<Piece> = Vec::new();
    let mut unresolved: Vec<Cluster> = Vec::new();
    let mut add_resolved = |factor: MultiPoly, params: Vec<Scalar>, eps: u32, point: Vec<Scalar>| {
        if let Some(piece) = resolved.iter_mut().find(|p| p.point == point) {
            piece.factor = &piece.factor * &factor;
            piece.parameters.extend(params);
            piece.epsilon += eps;
        } else {
            resolved.push(Piece { factor, parameters: params, epsilon: eps, point });
        }
    };

    for (f, e) in &squarefree {
        let roots = rational_roots(f, Var::ParamT).map_err(|x| AdjointError::Internal(x.to_string()))?;
        let mut rest = f.clone();
        for (r, _) in &roots {
            let lin = &MultiPoly::var(Var::ParamT) - &MultiPoly::constant(r.clone());
            rest = rest.exact_divide(&lin).expect("root divides");
            let point = cm
                .phi
                .point_at(r)
                .ok_or_else(|| AdjointError::Internal("parameter has no image".into()))?;
            add_resolved(lin, vec![r.clone()], *e, point);
        }
        if uni_degree(&rest, Var::ParamT) > 0 {
            let (pieces, leftover) = split_rational_image(&rest, &cm.phi);
            for (h, point) in pieces {
                let eps = *e * uni_degree(&h, Var::ParamT) as u32;
                add_resolved(h, Vec::new(), eps, point);
            }
            for h in leftover {
                let eps = *e * uni_degree(&h, Var::ParamT) as u32;
                unresolved.push(Cluster {
                    factor: h.primitive_part(),
                    parameters: Vec::new(),
                    epsilon: eps,
                    point: None,
                    multiplicity: None,
                });
            }
        }
    }

    let mut clusters: Vec<Cluster> = Vec::new();
    let mut accounted_twice = 0u32;
    for piece in resolved {
        let m = order_at_point(&cm.c, &piece.point);
        accounted_twice += m * (m.saturating_sub(1));
        clusters.push(Cluster {
            factor: piece.factor.primitive_part(),
            parameters: piece.parameters,
            epsilon: piece.epsilon,
            point: Some(piece.point),
            multiplicity: Some(m),
        });
    }
    for c in &unresolved {
        accounted_twice += c.epsilon;
    }
    clusters.extend(unresolved);

    let genus_lhs = ((d - 1) * (d - 2) / 2) as u32;
    let balanced = 2 * genus_lhs == accounted_twice;
    Ok(SingularityReport {
        dres: delta,
        gamma,
        squarefree,
        total_degree,
        expected_degree,
        clusters,
        genus_lhs,
        accounted_twice,
        balanced,
    })
}

/// Singular-parameter chart randomization: reparametrizes by small
/// invertible integer matrices (deterministic in the seed) until the
/// D-resultant reaches its full degree or the retry budget runs out.
/// Returns the model, its report, and the matrix used (identity = none).
pub fn report_with_retries(
    phi: &Parametrization,
    retries: usize,
    seed: u64,
) -> Result<(CurveModel, SingularityReport, Option<[[i64; 2]; 2]>), AdjointError> {
    let cm = CurveModel::new(phi.clone())?;
    let report = singularity_report(&cm)?;
    if report.total_degree == report.expected_degree || retries == 0 {
        return Ok((cm, report, None));
    }
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next_small = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 7) as i64 - 3
    };
    let mut last = (cm, report, None);
    for _ in 0..retries {
        let m = loop {
            let cand = [[1 + next_small(), next_small()], [next_small(), 1 + next_small()]];
            if cand[0][0] * cand[1][1] - cand[0][1] * cand[1][0] != 0 {
                break cand;
            }
        };
        let phi2 = match phi.reparametrized(m) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let cm2 = CurveModel::new(phi2)?;
        let report2 = singularity_report(&cm2)?;
        let done = report2.total_degree == report2.expected_degree;
        last = (cm2, report2, Some(m));
        if done {
            break;
        }
    }
    Ok(last)
}

/// First rational point from a fixed candidate list lying off the curve;
/// used to anchor polar-based branch checks.
pub fn base_point_off_curve(cm: &CurveModel) -> Option<Vec<Scalar>> {
    let candidates: [[i64; 3]; 7] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, -1, 1],
        [1, 2, 3],
        [5, 1, -2],
    ];
    for cand in candidates {
        let point: Vec<Scalar> = cand.iter().map(|&x| Scalar::from_int(x)).collect();
        if !cm.eval_curve(&point).is_zero() {
            return Some(point);
        }
    }
    None
}

/// Convenience: the line components of a mu = 1 moving line p, exposed
/// for inverse-map style uses.
pub fn moving_line_components(mb: &MuBasis) -> [MultiPoly; 3] {
    t_components(mb.p())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn phi(strs: [&str; 3]) -> Parametrization {
        let [a, b, c] = strs.map(|s| parse_poly(s).unwrap());
        Parametrization::new(a, b, c).unwrap()
    }

    fn cusp() -> CurveModel {
        CurveModel::new(phi(["X1^2*X2", "X1^3", "X2^3"])).unwrap()
    }

    fn nodal() -> CurveModel {
        CurveModel::new(phi(["X1^2*X2 - X2^3", "X1^3 - X1*X2^2", "X2^3"])).unwrap()
    }

    fn quartic() -> CurveModel {
        CurveModel::new(phi(["X1^4", "X1^3*X2 + X1*X2^3", "X2^4"])).unwrap()
    }

    fn pt(coords: [i64; 3]) -> Vec<Scalar> {
        coords.iter().map(|&c| Scalar::from_int(c)).collect()
    }

    #[test]
    fn cusp_model() {
        let cm = cusp();
        assert_eq!(cm.deg_phi(), 1);
        assert_eq!(*cm.implicit(), parse_poly("T1^3 - T2^2*T3").unwrap());
        assert_eq!(cm.curve_degree(), 3);
    }

    #[test]
    fn polar_examples() {
        let c = parse_poly("T2^2*T3 - T1^3").unwrap();
        assert_eq!(polar_curve(&c, &pt([0, 1, 0])).unwrap(), parse_poly("2*T2*T3").unwrap());
        let c2 = parse_poly("T1^2 - T2*T3").unwrap();
        assert_eq!(polar_curve(&c2, &pt([1, 0, 0])).unwrap(), parse_poly("2*T1").unwrap());
        // linearity in the base point
        let q1 = pt([1, 2, 0]);
        let q2 = pt([0, 1, 5]);
        let sum = pt([1, 3, 5]);
        let lhs = polar_curve(&c, &sum).unwrap();
        let rhs = &polar_curve(&c, &q1).unwrap() + &polar_curve(&c, &q2).unwrap();
        assert_eq!(lhs, rhs);
        assert!(polar_curve(&MultiPoly::zero(), &q1).is_err());
    }

    #[test]
    fn order_at_point_examples() {
        let c = parse_poly("T1^3 - T2^2*T3").unwrap();
        assert_eq!(order_at_point(&c, &pt([0, 0, 1])), 2);
        // a point off the curve
        assert_eq!(order_at_point(&c, &pt([1, 1, 0])), 0);
        // smooth points on the curve
        assert_eq!(order_at_point(&c, &pt([1, 1, 1])), 1);
        assert_eq!(order_at_point(&c, &pt([4, 8, 1])), 1);
        // point with T3 = 0 uses another chart
        assert_eq!(order_at_point(&c, &pt([0, 1, 0])), 1);
    }

    #[test]
    fn adjoint_candidates_cusp() {
        let cm = cusp();
        let cands = adjoint_candidates(&cm).unwrap();
        assert_eq!(cands, vec![parse_poly("T2*T3").unwrap(), parse_poly("T1^2").unwrap()]);
        for c in &cands {
            assert!(eval_t_form(c, &pt([0, 0, 1])).is_zero());
        }
    }

    #[test]
    fn adjoint_candidates_guards() {
        let conic = CurveModel::new(phi(["X1^2", "X1*X2", "X2^2"])).unwrap();
        assert!(matches!(adjoint_candidates(&conic), Err(AdjointError::NoSingularities)));
        let double = CurveModel::new(phi(["X1^2*X2^2", "X1^4", "X2^4"])).unwrap();
        assert!(matches!(adjoint_candidates(&double), Err(AdjointError::NotBirational)));
    }

    #[test]
    fn adjoint_pencils_fixtures() {
        let cm = cusp();
        let pencils = adjoint_pencils(&cm).unwrap();
        assert_eq!(pencils.len(), 1);
        assert_eq!(*pencils[0].poly(), parse_poly("T2*T3*X1 - T1^2*X2").unwrap());

        let cm = quartic();
        let pencils = adjoint_pencils(&cm).unwrap();
        assert_eq!(pencils.len(), 2);
        let sres = cm.mu_basis().form_pair().subresultants();
        let x1 = MultiPoly::var(Var::X1);
        let x2 = MultiPoly::var(Var::X2);
        assert_eq!(*pencils[0].poly(), &(&x1 * &sres[0]) - &(&x2 * &sres[1]));
        assert_eq!(*pencils[1].poly(), &(&x1 * &sres[1]) - &(&x2 * &sres[2]));
    }

    #[test]
    fn d_resultant_fixtures() {
        assert_eq!(d_resultant(&cusp()).unwrap(), parse_poly("t^2").unwrap());
        assert_eq!(d_resultant(&nodal()).unwrap(), parse_poly("t^2 - 1").unwrap());
        assert_eq!(
            d_resultant(&quartic()).unwrap(),
            parse_poly("t^6 + t^4 + t^2 + 1").unwrap()
        );
    }

    #[test]
    fn quartic_subresultants_normalized() {
        let sres = quartic().mu_basis().form_pair().subresultants();
        // raw value of the principal subresultant, exact
        assert_eq!(sres[0], parse_poly("T2^2 - T1*T3 + T3^2").unwrap());
        // the triple up to the positive-primitive normalization
        let expect = ["T2^2 - T1*T3 + T3^2", "-T2*(T1 + T3)", "T1^2 - T1*T3 + T2^2"];
        for (s, e) in sres.iter().zip(expect) {
            assert_eq!(s.primitive_part(), parse_poly(e).unwrap().primitive_part());
        }
        // each vanishes at the rational node (1:0:1)
        for s in &sres {
            assert!(eval_t_form(s, &pt([1, 0, 1])).is_zero());
            assert!(order_at_point(s, &pt([1, 0, 1])) >= 1);
        }
    }

    #[test]
    fn singularity_report_cusp() {
        let report = singularity_report(&cusp()).unwrap();
        assert_eq!(report.total_degree, 2);
        assert_eq!(report.expected_degree, 2);
        assert_eq!(report.clusters.len(), 1);
        let c = &report.clusters[0];
        assert_eq!(c.parameters, vec![Scalar::zero()]);
        assert_eq!(c.epsilon, 2);
        assert_eq!(c.point.as_ref().unwrap(), &pt([0, 0, 1]));
        assert_eq!(c.multiplicity, Some(2));
        assert_eq!(report.genus_lhs, 1);
        assert!(report.balanced);
    }

    #[test]
    fn singularity_report_nodal() {
        let report = singularity_report(&nodal()).unwrap();
        assert_eq!(report.total_degree, 2);
        assert_eq!(report.clusters.len(), 1);
        let c = &report.clusters[0];
        assert_eq!(c.parameters, vec![Scalar::from_int(-1), Scalar::from_int(1)]);
        assert_eq!(c.epsilon, 2);
        assert_eq!(c.point.as_ref().unwrap(), &pt([0, 0, 1]));
        assert_eq!(c.multiplicity, Some(2));
        assert!(report.balanced);
    }

    #[test]
    fn singularity_report_quartic() {
        let report = singularity_report(&quartic()).unwrap();
        assert_eq!(report.total_degree, 6);
        assert_eq!(report.expected_degree, 6);
        assert_eq!(report.clusters.len(), 2);
        let resolved = report.clusters.iter().find(|c| c.point.is_some()).unwrap();
        assert_eq!(resolved.factor, parse_poly("t^2 + 1").unwrap());
        assert_eq!(resolved.epsilon, 2);
        assert_eq!(resolved.point.as_ref().unwrap(), &pt([1, 0, 1]));
        assert_eq!(resolved.multiplicity, Some(2));
        let unresolved = report.clusters.iter().find(|c| c.point.is_none()).unwrap();
        assert_eq!(unresolved.factor, parse_poly("t^4 + 1").unwrap());
        assert_eq!(unresolved.epsilon, 4);
        // ledger: 3 = 1 (node) + 2 (two conjugate nodes)
        assert_eq!(report.genus_lhs, 3);
        assert_eq!(report.accounted_twice, 6);
        assert!(report.balanced);
    }

    #[test]
    fn branch_check_cusp_equality() {
        let cm = cusp();
        let q = base_point_off_curve(&cm).unwrap();
        assert_eq!(q, pt([1, 0, 0]));
        let dform = cm.mu_basis().form_pair().subresultants()[0].primitive_part();
        assert_eq!(dform, parse_poly("T1").unwrap());
        let (holds, checks) = branch_adjoint_check(&cm, &dform, &q).unwrap();
        assert!(holds);
        assert_eq!(checks.len(), 1);
        let c = &checks[0];
        assert_eq!((c.ord_d, c.ord_polar, c.ord_line), (Some(2), Some(4), Some(3)));
        assert!(c.equality);
    }

    #[test]
    fn branch_check_nodal_equality() {
        let cm = nodal();
        let q = base_point_off_curve(&cm).unwrap();
        let dform = cm.mu_basis().form_pair().subresultants()[0].primitive_part();
        let (holds, checks) = branch_adjoint_check(&cm, &dform, &q).unwrap();
        assert!(holds);
        assert_eq!(checks.len(), 2);
        for c in &checks {
            assert!(c.holds && c.equality);
        }
    }

    #[test]
    fn branch_check_degenerate_inputs() {
        let cm = nodal();
        let q = base_point_off_curve(&cm).unwrap();
        // the curve itself pulls back to zero: infinite order passes
        let (holds, checks) = branch_adjoint_check(&cm, cm.implicit(), &q).unwrap();
        assert!(holds);
        assert!(checks.iter().all(|c| c.ord_d.is_none()));
        // a constant misses the singular point: the inequality fails
        let (holds, _) = branch_adjoint_check(&cm, &MultiPoly::one(), &q).unwrap();
        assert!(!holds);
        // a base point on the curve is rejected
        assert!(matches!(
            branch_adjoint_check(&cm, &MultiPoly::var(Var::T1), &pt([0, 0, 1])),
            Err(AdjointError::PointOnCurve)
        ));
    }

    #[test]
    fn inverse_map_fixtures() {
        // mu = 1 fallback: (X1 : X2) = (T2 : T1) on the cusp and the nodal cubic
        for cm in [cusp(), nodal()] {
            let inv = inverse_map(&cm).unwrap();
            assert_eq!(inv.a, parse_poly("T2").unwrap());
            assert_eq!(inv.b, parse_poly("T1").unwrap());
            assert_eq!(inv.orientation, 1);
            assert_eq!(inv.sres_index, None);
        }

        let cm = quartic();
        let inv = inverse_map(&cm).unwrap();
        assert_eq!(inv.sres_index, Some(0));
        // identity a(phi(t)) = orientation * t * b(phi(t)), checked again
        let t = MultiPoly::var(Var::ParamT);
        let lhs = cm.phi().pullback(&inv.a);
        let rhs = (&t * &cm.phi().pullback(&inv.b)).scale(&Scalar::from_int(inv.orientation));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chart_retry_moves_infinite_parameter() {
        // cusp with the singular parameter at infinity: Delta degenerates
        let phi_inf = phi(["X1*X2^2", "X2^3", "X1^3"]);
        let cm = CurveModel::new(phi_inf.clone()).unwrap();
        let report = singularity_report(&cm).unwrap();
        assert!(report.total_degree < report.expected_degree);

        let (_, report2, used) = report_with_retries(&phi_inf, 5, 12345).unwrap();
        assert_eq!(report2.total_degree, report2.expected_degree);
        assert!(used.is_some());
        // the curve is unchanged, so the singular point still has m = 2
        let resolved = report2.clusters.iter().find(|c| c.point.is_some()).unwrap();
        assert_eq!(resolved.multiplicity, Some(2));
    }
}
