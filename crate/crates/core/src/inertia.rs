//! Sylvester forms, Morley forms, the M_nu minor families, iterated
//! Sylvester forms for d1 = 1, the exact ideal-membership oracle for
//! inertia forms, and assembly of moving-curve-ideal generator sets.

use crate::biform::BiForm;
use crate::linalg::{PolyMatrix, QMatrix};
use crate::mubasis::MuBasis;
use crate::poly::{monomials_of_degree, monomials_of_degrees, MultiPoly};
use crate::resultants::{assemble_binary, FormPair};
use crate::scalar::Scalar;
use crate::variable::{Var, T_VARS, X_VARS, Y_VARS};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub enum InertiaError {
    BetaOutOfRange,
    NuOutOfRange,
    RequiresLinearFirstForm,
}

impl std::fmt::Display for InertiaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InertiaError::BetaOutOfRange => write!(f, "|beta| must be at most d1 - 1"),
            InertiaError::NuOutOfRange => write!(f, "nu out of range"),
            InertiaError::RequiresLinearFirstForm => write!(f, "requires d1 = 1"),
        }
    }
}

impl std::error::Error for InertiaError {}

// ---- Sylvester forms ----

#[derive(Clone, Debug)]
pub struct SylvesterForm {
    pub beta: (u32, u32),
    pub value: MultiPoly,
}

/// Canonical 2x2 decomposition determinant: every monomial of f_i with
/// X1-exponent at least beta1 + 1 is routed to the first column (divided
/// by X1^(beta1+1)), the rest to the second (divided by X2^(beta2+1)).
pub fn sylvester_form(fp: &FormPair, beta: (u32, u32)) -> Result<SylvesterForm, InertiaError> {
    if (beta.0 + beta.1) as usize > fp.d1() - 1 {
        return Err(InertiaError::BetaOutOfRange);
    }
    let split = |coeffs: &[MultiPoly]| -> (MultiPoly, MultiPoly) {
        let d = coeffs.len() - 1;
        let mut first = MultiPoly::zero();
        let mut second = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x1 = (d - k) as u32;
            let x2 = k as u32;
            if x1 >= beta.0 + 1 {
                let m = MultiPoly::monomial(Scalar::one(), &[(Var::X1, x1 - beta.0 - 1), (Var::X2, x2)]);
                first = &first + &(c * &m);
            } else {
                let m = MultiPoly::monomial(Scalar::one(), &[(Var::X1, x1), (Var::X2, x2 - beta.1 - 1)]);
                second = &second + &(c * &m);
            }
        }
        (first, second)
    };
    let (f11, f12) = split(fp.u_coeffs());
    let (f21, f22) = split(fp.v_coeffs());
    let value = &(&f11 * &f22) - &(&f12 * &f21);
    Ok(SylvesterForm { beta, value })
}

// ---- Morley forms ----

#[derive(Clone, Debug)]
pub struct MorleyForm {
    /// chosen representative of the class in B (x) B
    pub value: MultiPoly,
    delta: u32,
    /// bihomogeneous components keyed by (X-degree, Y-degree), p + q = delta
    pub components: BTreeMap<(u32, u32), MultiPoly>,
}

/// Telescoping decomposition of f_i(X) - f_i(Y): the X1 -> Y1 step divided
/// by X1 - Y1 and the X2 -> Y2 step divided by X2 - Y2; the Morley form is
/// the determinant of the resulting 2x2 matrix.
pub fn morley_form(fp: &FormPair) -> MorleyForm {
    let delta = fp.delta() as u32;
    let h = |f: &MultiPoly| -> (MultiPoly, MultiPoly) {
        let y1x2 = f.substitute(Var::X1, &MultiPoly::var(Var::Y1));
        let yy = y1x2.substitute(Var::X2, &MultiPoly::var(Var::Y2));
        let h1 = (f - &y1x2)
            .exact_divide(&(&MultiPoly::var(Var::X1) - &MultiPoly::var(Var::Y1)))
            .expect("telescoping step divides");
        let h2 = (&y1x2 - &yy)
            .exact_divide(&(&MultiPoly::var(Var::X2) - &MultiPoly::var(Var::Y2)))
            .expect("telescoping step divides");
        (h1, h2)
    };
    let (h11, h12) = h(&fp.f1_poly());
    let (h21, h22) = h(&fp.f2_poly());
    let value = &(&h11 * &h22) - &(&h12 * &h21);
    let mut components = BTreeMap::new();
    for p in 0..=delta {
        let q = delta - p;
        let c = value.component_in(&[(&X_VARS, p), (&Y_VARS, q)]);
        components.insert((p, q), c);
    }
    MorleyForm { value, delta, components }
}

impl MorleyForm {
    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn component(&self, p: u32, q: u32) -> MultiPoly {
        self.components.get(&(p, q)).cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// Coefficients q_beta(X) of the Y-degree-`ydeg` part, indexed by the
    /// Y-exponent pair.
    pub fn y_coefficients(&self, ydeg: u32) -> BTreeMap<(u32, u32), MultiPoly> {
        let part = self.component(self.delta - ydeg, ydeg);
        let mut out = BTreeMap::new();
        for (key, c) in part.coefficients_by(&Y_VARS) {
            out.insert((key[0], key[1]), c);
        }
        out
    }
}

// ---- the matrices M_nu and their minors ----

/// The (delta-nu+1) x (delta-nu-d1+2) matrix whose left block is the
/// multiplication-by-f1 map in descending monomial bases and whose last
/// column holds the Morley coefficients of Y-degree delta-nu.
pub fn m_matrix(fp: &FormPair, nu: usize) -> Result<PolyMatrix, InertiaError> {
    let (d1, d2) = (fp.d1(), fp.d2());
    let delta = fp.delta();
    if nu + 1 < d1 || nu + 2 > d2 {
        return Err(InertiaError::NuOutOfRange);
    }
    let morley = morley_form(fp);
    let q = morley.y_coefficients((delta - nu) as u32);
    let rows = delta - nu + 1;
    let cols = delta - nu - d1 + 2;
    let u = fp.u_coeffs().to_vec();
    Ok(PolyMatrix::from_fn(rows, cols, move |r, j| {
        if j + 1 < cols {
            let idx = r as i64 - j as i64;
            if idx >= 0 && (idx as usize) < u.len() {
                u[idx as usize].clone()
            } else {
                MultiPoly::zero()
            }
        } else {
            let beta = ((delta - nu - r) as u32, r as u32);
            q.get(&beta).cloned().unwrap_or_else(MultiPoly::zero)
        }
    }))
}

/// All maximal minors of M_nu, indexed by deleted-row sets in canonical
/// order; each is an inertia form of X-degree nu.
pub fn m_minors(
    fp: &FormPair,
    nu: usize,
    threads: usize,
) -> Result<Vec<(Vec<usize>, MultiPoly)>, InertiaError> {
    let m = m_matrix(fp, nu)?;
    Ok(m.maximal_minors(threads).expect("M_nu has at least as many rows as columns"))
}

/// The signed degree-1 minor family for d1 = 2 pinned by the bordered
/// T-expansion: Delta_i = X2 SRes_(i+1) - X1 SRes_i for i = 0..delta-1.
pub fn delta_minors_nu1(fp: &FormPair) -> Result<Vec<MultiPoly>, InertiaError> {
    if fp.d1() != 2 {
        return Err(InertiaError::NuOutOfRange);
    }
    let delta = fp.delta();
    let minors = m_minors(fp, 1, 1)?;
    Ok((0..delta)
        .map(|i| {
            let m = &minors[delta - 1 - i].1;
            if i % 2 == 0 {
                -m
            } else {
                m.clone()
            }
        })
        .collect())
}

/// Iterated Sylvester forms for d1 = 1: h_delta = sylv_(0,0)(f1, f2) and
/// h_(nu) = sylv_(0,0)(f1, h_(nu+1)); returned indexed by nu = 0..delta.
/// Each h_nu equals det(M_nu) up to sign.
pub fn iterated_sylvester(fp: &FormPair) -> Result<Vec<MultiPoly>, InertiaError> {
    if fp.d1() != 1 {
        return Err(InertiaError::RequiresLinearFirstForm);
    }
    let delta = fp.delta();
    let f1 = fp.f1_poly();
    let mut out = vec![MultiPoly::zero(); delta + 1];
    let mut current = sylvester_form(fp, (0, 0))?.value;
    out[delta] = current.clone();
    for nu in (0..delta).rev() {
        let pair = FormPair::new(&f1, &current).expect("h has positive degree");
        current = sylvester_form(&pair, (0, 0))?.value;
        out[nu] = current.clone();
    }
    Ok(out)
}

// ---- exact ideal membership ----

/// Expresses `target` as a combination of the generators with cofactors
/// drawn from the listed monomial supports; returns the cofactors when
/// the linear system is consistent.
pub fn express_in_ideal(
    target: &MultiPoly,
    gens: &[(&MultiPoly, &[MultiPoly])],
) -> Option<Vec<MultiPoly>> {
    let mut row_of: BTreeMap<Vec<(Var, u32)>, usize> = BTreeMap::new();
    let index = |p: &MultiPoly, rows: &mut BTreeMap<Vec<(Var, u32)>, usize>| {
        for (_, mono) in p.terms() {
            let n = rows.len();
            rows.entry(mono).or_insert(n);
        }
    };
    let mut products: Vec<Vec<MultiPoly>> = Vec::new();
    for (g, monos) in gens {
        let mut col = Vec::with_capacity(monos.len());
        for m in monos.iter() {
            let prod = *g * m;
            index(&prod, &mut row_of);
            col.push(prod);
        }
        products.push(col);
    }
    index(target, &mut row_of);
    let rows = row_of.len();
    let cols: usize = products.iter().map(|c| c.len()).sum();
    if cols == 0 {
        return if target.is_zero() { Some(gens.iter().map(|_| MultiPoly::zero()).collect()) } else { None };
    }
    let mut m = QMatrix::zero(rows, cols);
    let mut col_idx = 0usize;
    for col in &products {
        for prod in col {
            for (c, mono) in prod.terms() {
                let r = row_of[&mono];
                m.set(r, col_idx, c);
            }
            col_idx += 1;
        }
    }
    let mut rhs = vec![Scalar::zero(); rows];
    for (c, mono) in target.terms() {
        rhs[row_of[&mono]] = c;
    }
    let x = m.solve(&rhs)?;
    let mut out = Vec::with_capacity(gens.len());
    let mut k = 0usize;
    for (gi, (_, monos)) in gens.iter().enumerate() {
        let _ = gi;
        let mut acc = MultiPoly::zero();
        for m in monos.iter() {
            if !x[k].is_zero() {
                acc = &acc + &m.scale(&x[k]);
            }
            k += 1;
        }
        out.push(acc);
    }
    Some(out)
}

/// Monomials homogeneous of the given degrees in X and T.
pub fn monomials_xt(xdeg: u32, tdeg: u32) -> Vec<MultiPoly> {
    monomials_of_degrees(&[(&X_VARS, xdeg), (&T_VARS, tdeg)])
}

/// Decides whether X1^k F and X2^k F lie in (p, q), by an exact linear
/// solve for cofactors of the bidegrees fixed by the grading: the p
/// cofactor has X-degree xdeg(F) + k - mu, the q cofactor
/// xdeg(F) + k - (d - mu), both with T-degree tdeg(F) - 1.
pub fn is_inertia_form(f: &BiForm, mb: &MuBasis, k: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let mu = mb.mu() as i64;
    let dq = (mb.parametrization_degree() - mb.mu()) as i64;
    if f.tdeg() == 0 {
        // p and q are linear in T, so a T-free nonzero form is never a member
        return false;
    }
    let tdeg = f.tdeg() - 1;
    for xv in [Var::X1, Var::X2] {
        let target = &MultiPoly::monomial(Scalar::one(), &[(xv, k)]) * f.poly();
        let total_x = f.xdeg() as i64 + k as i64;
        let mut gens: Vec<(&MultiPoly, Vec<MultiPoly>)> = Vec::new();
        let pa = total_x - mu;
        let pb = total_x - dq;
        let p_monos = if pa >= 0 { monomials_xt(pa as u32, tdeg) } else { Vec::new() };
        let q_monos = if pb >= 0 { monomials_xt(pb as u32, tdeg) } else { Vec::new() };
        gens.push((mb.p().poly(), p_monos));
        gens.push((mb.q().poly(), q_monos));
        let borrowed: Vec<(&MultiPoly, &[MultiPoly])> =
            gens.iter().map(|(g, m)| (*g, m.as_slice())).collect();
        if express_in_ideal(&target, &borrowed).is_none() {
            return false;
        }
    }
    true
}

/// Membership in (f1(X), f2(X), f1(Y), f2(Y)) for targets in the Morley
/// ring, decided per bihomogeneous component. `extra` lists the allowed
/// non-XY monomial factors of the cofactors (use `[1]` for constant
/// coefficients).
pub fn in_four_generator_ideal(target: &MultiPoly, fp: &FormPair, extra: &[MultiPoly]) -> bool {
    if target.is_zero() {
        return true;
    }
    let f1x = fp.f1_poly();
    let f2x = fp.f2_poly();
    let swap = |p: &MultiPoly| {
        p.substitute_many(&[
            (Var::X1, MultiPoly::var(Var::Y1)),
            (Var::X2, MultiPoly::var(Var::Y2)),
        ])
    };
    let f1y = swap(&f1x);
    let f2y = swap(&f2x);
    let d1 = fp.d1() as i64;
    let d2 = fp.d2() as i64;
    // split into bihomogeneous components; the ideal is bigraded
    let mut seen: Vec<(u32, u32)> = Vec::new();
    for (_, mono) in target.terms() {
        let a: u32 = mono.iter().filter(|(v, _)| X_VARS.contains(v)).map(|(_, e)| e).sum();
        let b: u32 = mono.iter().filter(|(v, _)| Y_VARS.contains(v)).map(|(_, e)| e).sum();
        if !seen.contains(&(a, b)) {
            seen.push((a, b));
        }
    }
    for (a, b) in seen {
        let comp = target.component_in(&[(&X_VARS, a), (&Y_VARS, b)]);
        if comp.is_zero() {
            continue;
        }
        let xy_monos = |xd: i64, yd: i64| -> Vec<MultiPoly> {
            if xd < 0 || yd < 0 {
                return Vec::new();
            }
            let base = monomials_of_degrees(&[(&X_VARS, xd as u32), (&Y_VARS, yd as u32)]);
            let mut out = Vec::with_capacity(base.len() * extra.len());
            for m in &base {
                for e in extra {
                    out.push(m * e);
                }
            }
            out
        };
        let g1 = xy_monos(a as i64 - d1, b as i64);
        let g2 = xy_monos(a as i64 - d2, b as i64);
        let g3 = xy_monos(a as i64, b as i64 - d1);
        let g4 = xy_monos(a as i64, b as i64 - d2);
        let gens: Vec<(&MultiPoly, &[MultiPoly])> = vec![
            (&f1x, g1.as_slice()),
            (&f2x, g2.as_slice()),
            (&f1y, g3.as_slice()),
            (&f2y, g4.as_slice()),
        ];
        if express_in_ideal(&comp, &gens).is_none() {
            return false;
        }
    }
    true
}

/// Membership of a W-graded target in (f1, f2) with X-homogeneous
/// cofactors carrying bounded auxiliary-variable monomials.
pub fn in_pair_ideal(target: &MultiPoly, fp: &FormPair, extra: &[MultiPoly]) -> bool {
    if target.is_zero() {
        return true;
    }
    let f1 = fp.f1_poly();
    let f2 = fp.f2_poly();
    let xd = match target.homogeneous_degree_in(&X_VARS) {
        Some(d) => d as i64,
        None => return false,
    };
    let monos = |deg: i64| -> Vec<MultiPoly> {
        if deg < 0 {
            return Vec::new();
        }
        let base = monomials_of_degree(&X_VARS, deg as u32);
        let mut out = Vec::with_capacity(base.len() * extra.len());
        for m in &base {
            for e in extra {
                out.push(m * e);
            }
        }
        out
    };
    let g1 = monos(xd - fp.d1() as i64);
    let g2 = monos(xd - fp.d2() as i64);
    let gens: Vec<(&MultiPoly, &[MultiPoly])> =
        vec![(&f1, g1.as_slice()), (&f2, g2.as_slice())];
    express_in_ideal(target, &gens).is_some()
}

// ---- moving curve ideal generators ----

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    P,
    Q,
    Res,
    DetM(usize),
    Sylv(u32, u32),
    DeltaMinor(usize, Vec<usize>),
    DBeta(Vec<u32>),
}

impl Provenance {
    pub fn label(&self) -> String {
        match self {
            Provenance::P => "p".into(),
            Provenance::Q => "q".into(),
            Provenance::Res => "res".into(),
            Provenance::DetM(nu) => format!("detM({nu})"),
            Provenance::Sylv(a, b) => format!("sylv({a},{b})"),
            Provenance::DeltaMinor(nu, del) => {
                let rows: Vec<String> = del.iter().map(|r| r.to_string()).collect();
                format!("delta(nu={nu};del={})", rows.join(","))
            }
            Provenance::DBeta(beta) => {
                let idx: Vec<String> = beta.iter().map(|b| b.to_string()).collect();
                format!("Dbeta({})", idx.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub provenance: Provenance,
    pub form: BiForm,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Completeness {
    Complete(String),
    Partial(String),
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completeness::Complete(_))
    }

    pub fn condition(&self) -> &str {
        match self {
            Completeness::Complete(s) | Completeness::Partial(s) => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub mu: usize,
    pub generators: Vec<Generator>,
    pub completeness: Completeness,
}

/// Emits the inertia-form generator family for the moving curve ideal of
/// the parametrization underlying `mb`, by the mu-stratified recipe.
/// Generators are content-normalized, deduplicated by canonical form, and
/// a generator that is a monomial multiple of an earlier one is dropped.
pub fn moving_curve_generators(mb: &MuBasis, deg_phi: usize, threads: usize) -> GeneratorSet {
    let mu = mb.mu();
    let d = mb.parametrization_degree();
    let delta = d - 2;
    let fp = mb.form_pair();
    let mut raw: Vec<(Provenance, MultiPoly)> = Vec::new();
    raw.push((Provenance::P, mb.p().poly().clone()));
    raw.push((Provenance::Q, mb.q().poly().clone()));
    match mu {
        1 => {
            for nu in 0..delta {
                let det = m_matrix(&fp, nu)
                    .expect("nu in range for mu = 1")
                    .det()
                    .expect("M_nu is square for d1 = 1");
                raw.push((Provenance::DetM(nu), det));
            }
            raw.push((Provenance::Sylv(0, 0), sylvester_form(&fp, (0, 0)).unwrap().value));
        }
        2 => {
            raw.push((Provenance::Res, fp.resultant()));
            for nu in 1..=delta.saturating_sub(2) {
                for (del, minor) in m_minors(&fp, nu, threads).expect("nu in range") {
                    raw.push((Provenance::DeltaMinor(nu, del), minor));
                }
            }
            for (a, b) in [(1u32, 0u32), (0, 1), (0, 0)] {
                raw.push((Provenance::Sylv(a, b), sylvester_form(&fp, (a, b)).unwrap().value));
            }
        }
        _ => {
            for nu in 0..=mu - 2 {
                for (beta, dform) in fp.d_beta_coefficients(nu).expect("nu in range") {
                    raw.push((Provenance::DBeta(beta), dform));
                }
            }
            for nu in mu - 1..=d - mu - 2 {
                for (del, minor) in m_minors(&fp, nu, threads).expect("nu in range") {
                    raw.push((Provenance::DeltaMinor(nu, del), minor));
                }
            }
            for s in (0..mu as u32).rev() {
                for b in 0..=s {
                    let beta = (s - b, b);
                    raw.push((Provenance::Sylv(beta.0, beta.1), sylvester_form(&fp, beta).unwrap().value));
                }
            }
        }
    }

    let mut generators: Vec<Generator> = Vec::new();
    for (prov, poly) in raw {
        if poly.is_zero() {
            continue;
        }
        let prim = poly.primitive_part();
        let redundant = generators.iter().any(|g| {
            prim.exact_divide(g.form.poly())
                .map(|q| q.num_terms() == 1)
                .unwrap_or(false)
        });
        if redundant {
            continue;
        }
        let form = BiForm::new(prim).expect("generators are bihomogeneous");
        generators.push(Generator { provenance: prov, form });
    }

    let completeness = completeness_for(mb, deg_phi);
    GeneratorSet { mu, generators, completeness }
}

fn completeness_for(mb: &MuBasis, deg_phi: usize) -> Completeness {
    let mu = mb.mu();
    let d = mb.parametrization_degree();
    match mu {
        1 => Completeness::Complete("unconditional for mu = 1".into()),
        2 => {
            if deg_phi != 1 {
                return Completeness::Partial("deg(phi) > 1".into());
            }
            if d == 4 {
                return Completeness::Complete("deg(phi) = 1 and d = 4".into());
            }
            if linear_forms_rank(&mb.u_forms()) == 3 {
                Completeness::Complete("deg(phi) = 1 and V(U0,U1,U2) empty (rank 3)".into())
            } else {
                Completeness::Partial("V(U0,U1,U2) is nonempty (rank < 3)".into())
            }
        }
        _ => {
            let surrogate = mu_ge3_minor_span(mb);
            let note = if surrogate {
                "heuristic surrogate: (p q) multiplication minors span all degree-(d-4) forms"
            } else {
                "heuristic surrogate fails: (p q) multiplication minors do not span degree d-4"
            };
            Completeness::Partial(note.into())
        }
    }
}

/// Rank of the coefficient matrix of linear T-forms.
fn linear_forms_rank(forms: &[MultiPoly]) -> usize {
    let m = QMatrix::from_fn(forms.len(), 3, |i, j| {
        forms[i]
            .coefficients_by(&T_VARS)
            .get(&{
                let mut k = vec![0u32; 3];
                k[j] = 1;
                k
            })
            .and_then(|c| c.as_scalar())
            .unwrap_or_else(Scalar::zero)
    });
    m.rank()
}

/// Sufficient emptiness certificate for Eq-style minor loci: the maximal
/// minors of the (p q) multiplication matrix into degree d-3 span the full
/// space of degree-(d-4) T-forms.
fn mu_ge3_minor_span(mb: &MuBasis) -> bool {
    let d = mb.parametrization_degree();
    let mu = mb.mu();
    if d < 6 || mu < 3 {
        return false;
    }
    let rows = d - 2;
    let p_cols = d - mu - 2;
    let q_cols = mu - 2;
    let u = mb.u_forms();
    let v = mb.v_forms();
    let entry = |list: &[MultiPoly], r: i64| -> MultiPoly {
        if r >= 0 && (r as usize) < list.len() {
            list[r as usize].clone()
        } else {
            MultiPoly::zero()
        }
    };
    let m = PolyMatrix::from_fn(rows, p_cols + q_cols, |r, j| {
        if j < p_cols {
            entry(&u, r as i64 - j as i64)
        } else {
            entry(&v, r as i64 - (j - p_cols) as i64)
        }
    });
    let minors = match m.maximal_minors(1) {
        Ok(ms) => ms,
        Err(_) => return false,
    };
    let basis = monomials_of_degree(&T_VARS, (d - 4) as u32);
    let coeff = QMatrix::from_fn(minors.len(), basis.len(), |i, j| {
        let key: Vec<u32> = {
            let (_, mono) = basis[j].leading().expect("monomial");
            T_VARS
                .iter()
                .map(|v| mono.iter().find(|(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0))
                .collect()
        };
        minors[i]
            .1
            .coefficients_by(&T_VARS)
            .get(&key)
            .and_then(|c| c.as_scalar())
            .unwrap_or_else(Scalar::zero)
    });
    coeff.rank() == basis.len()
}

/// Convenience wrapper: assembles the binary form with the given
/// coefficient list (degree = len - 1).
pub fn binary_form(coeffs: &[MultiPoly]) -> MultiPoly {
    assemble_binary(coeffs)
}
