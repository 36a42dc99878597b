//! Exact multivariate polynomials over the rationals.
//!
//! Representation: an ordered variable list plus a map from dense exponent
//! vectors to nonzero coefficients. The term order is graded-lexicographic
//! with seniority X1 > X2 > Y1 > Y2 > T1 > T2 > T3 > W0 > ... > t > x > s,
//! so printed output is canonical and diffable. The variable list is kept
//! minimal: only variables that actually occur are stored.

use crate::scalar::Scalar;
use crate::variable::Var;
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub enum PolyError {
    NotDivisible,
    ZeroPolynomial,
    NotUnivariate,
    NotHomogeneous,
    NoExactRoot,
}

impl std::fmt::Display for PolyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PolyError::NotDivisible => write!(f, "not divisible"),
            PolyError::ZeroPolynomial => write!(f, "zero polynomial"),
            PolyError::NotUnivariate => write!(f, "not univariate"),
            PolyError::NotHomogeneous => write!(f, "not homogeneous"),
            PolyError::NoExactRoot => write!(f, "no exact root"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Dense exponent vector aligned with the owning polynomial's variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        // graded, then lexicographic; senior variables sit at low indices
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Mono, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Scalar::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Scalar::one(), &[(v, 1)])
    }

    /// Builds `c * prod v^e`.
    pub fn monomial(c: Scalar, exps: &[(Var, u32)]) -> Self {
        let mut p = Self::constant(c);
        for &(v, e) in exps {
            if e > 0 {
                let mut f = MultiPoly {
                    vars: vec![v],
                    terms: BTreeMap::from([(Mono(vec![e]), Scalar::one())]),
                };
                f.normalize();
                p = &p * &f;
            }
        }
        p
    }

    pub fn from_terms(terms: Vec<(Scalar, Vec<(Var, u32)>)>) -> Self {
        let mut acc = Self::zero();
        for (c, m) in terms {
            acc = &acc + &Self::monomial(c, &m);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Iterates terms in ascending canonical order as (coefficient, sparse monomial).
    pub fn terms(&self) -> impl Iterator<Item = (Scalar, Vec<(Var, u32)>)> + '_ {
        self.terms.iter().map(move |(m, c)| {
            let sparse: Vec<(Var, u32)> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(&v, &e)| (v, e))
                .collect();
            (c.clone(), sparse)
        })
    }

    /// Leading term in the canonical (graded-lex) order.
    pub fn leading(&self) -> Option<(Scalar, Vec<(Var, u32)>)> {
        self.terms.iter().next_back().map(|(m, c)| {
            let sparse: Vec<(Var, u32)> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(&v, &e)| (v, e))
                .collect();
            (c.clone(), sparse)
        })
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.vars.clear();
            return;
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let vars: Vec<Var> = keep.iter().map(|&i| self.vars[i]).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| (Mono(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    /// Re-expresses the terms over `new_vars`, which must contain every
    /// variable of `self`.
    fn with_vars(&self, new_vars: &[Var]) -> MultiPoly {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| new_vars.iter().position(|w| w == v).expect("missing variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; new_vars.len()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[pos[i]] = x;
                }
                (Mono(e), c.clone())
            })
            .collect();
        MultiPoly { vars: new_vars.to_vec(), terms }
    }

    fn merged_vars(&self, other: &MultiPoly) -> Vec<Var> {
        let mut vars = self.vars.clone();
        for &v in &other.vars {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        vars
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> MultiPoly {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        self.map_coeffs(|x| x * c)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    // ---- degrees and homogeneity ----

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, group: &[Var]) -> u32 {
        let idx: Vec<usize> = group
            .iter()
            .filter_map(|v| self.vars.iter().position(|w| w == v))
            .collect();
        self.terms
            .keys()
            .map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Degree in `group` shared by every term; `None` if inhomogeneous.
    /// The zero polynomial reports `Some(0)`.
    pub fn homogeneous_degree_in(&self, group: &[Var]) -> Option<u32> {
        let idx: Vec<usize> = group
            .iter()
            .filter_map(|v| self.vars.iter().position(|w| w == v))
            .collect();
        let mut result = None;
        for m in self.terms.keys() {
            let d: u32 = idx.iter().map(|&i| m.0[i]).sum();
            match result {
                None => result = Some(d),
                Some(r) if r != d => return None,
                _ => {}
            }
        }
        Some(result.unwrap_or(0))
    }

    pub fn involves(&self, v: Var) -> bool {
        self.vars.contains(&v)
    }

    pub fn involves_any(&self, group: &[Var]) -> bool {
        group.iter().any(|v| self.involves(*v))
    }

    /// Sum of the terms whose degree in each listed group matches.
    pub fn component_in(&self, groups: &[(&[Var], u32)]) -> MultiPoly {
        let idx: Vec<Vec<usize>> = groups
            .iter()
            .map(|(g, _)| {
                g.iter().filter_map(|v| self.vars.iter().position(|w| w == v)).collect()
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| {
                idx.iter().zip(groups).all(|(ix, (_, want))| {
                    ix.iter().map(|&i| m.0[i]).sum::<u32>() == *want
                })
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let mut out = MultiPoly { vars: self.vars.clone(), terms };
        out.normalize();
        out
    }

    /// Groups terms by their exponents in `group` (key order = `group` order);
    /// values have the group variables stripped out.
    pub fn coefficients_by(&self, group: &[Var]) -> BTreeMap<Vec<u32>, MultiPoly> {
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (c, sparse) in self.terms() {
            let key: Vec<u32> = group
                .iter()
                .map(|v| sparse.iter().find(|(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0))
                .collect();
            let rest: Vec<(Var, u32)> =
                sparse.iter().filter(|(w, _)| !group.contains(w)).cloned().collect();
            let term = MultiPoly::monomial(c, &rest);
            let entry = out.entry(key).or_insert_with(MultiPoly::zero);
            *entry = &*entry + &term;
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Univariate view: index k holds the coefficient of `v^k` (with `v` removed).
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let d = self.degree_in(&[v]) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (key, p) in self.coefficients_by(&[v]) {
            out[key[0] as usize] = p;
        }
        out
    }

    /// Coefficient list of a binary form in X1, X2 of degree `d`:
    /// entry k is the coefficient of X1^(d-k) X2^k. Fails when the
    /// polynomial is not X-homogeneous of degree `d`.
    pub fn binary_coeffs(&self, d: usize) -> Result<Vec<MultiPoly>, PolyError> {
        match self.homogeneous_degree_in(&[Var::X1, Var::X2]) {
            Some(k) if self.is_zero() || k as usize == d => {}
            _ => return Err(PolyError::NotHomogeneous),
        }
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (key, p) in self.coefficients_by(&[Var::X1, Var::X2]) {
            out[key[1] as usize] = p;
        }
        Ok(out)
    }

    // ---- substitution and calculus ----

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute_many(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (c, sparse) in self.terms() {
            let mut term = MultiPoly::constant(c);
            for (v, e) in sparse {
                let factor = match subs.iter().find(|(w, _)| *w == v) {
                    Some((_, rep)) => rep.pow(e),
                    None => MultiPoly::monomial(Scalar::one(), &[(v, e)]),
                };
                term = &term * &factor;
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn substitute(&self, v: Var, rep: &MultiPoly) -> MultiPoly {
        self.substitute_many(&[(v, rep.clone())])
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|w| *w == v) else {
            return MultiPoly::zero();
        };
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut v = m.0.clone();
            v[i] -= 1;
            out.terms.insert(Mono(v), c * &Scalar::from_int(e as i64));
        }
        out.normalize();
        out
    }

    /// Evaluates a univariate (or constant) polynomial at a rational point.
    pub fn eval_univariate(&self, v: Var, at: &Scalar) -> Result<Scalar, PolyError> {
        if self.vars.iter().any(|w| *w != v) {
            return Err(PolyError::NotUnivariate);
        }
        // Horner
        let coeffs = self.coeffs_in(v);
        let mut acc = Scalar::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * at) + &c.as_scalar().expect("constant coefficient");
        }
        Ok(acc)
    }

    // ---- division, content, roots ----

    /// Exact division: returns q with q*g = self, or `NotDivisible`.
    pub fn exact_divide(&self, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let vars = self.merged_vars(g);
        let mut r = self.with_vars(&vars);
        let gg = g.with_vars(&vars);
        let (glm, glc) = {
            let (m, c) = gg.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            (m, c)
        };
        let mut q = MultiPoly { vars: vars.clone(), terms: BTreeMap::new() };
        while !r.terms.is_empty() {
            let (rm, rc) = {
                let (m, c) = r.terms.iter().next_back().unwrap();
                (m.clone(), c.clone())
            };
            // leading-term divisibility; an indivisible leading term means
            // the division cannot be exact
            let mut diff = vec![0u32; vars.len()];
            let mut ok = true;
            for i in 0..vars.len() {
                if rm.0[i] < glm.0[i] {
                    ok = false;
                    break;
                }
                diff[i] = rm.0[i] - glm.0[i];
            }
            if !ok {
                return Err(PolyError::NotDivisible);
            }
            let qc = &rc / &glc;
            let qm = Mono(diff);
            // r -= (qc * qm) * g
            for (m, c) in &gg.terms {
                let key = Mono(m.0.iter().zip(&qm.0).map(|(a, b)| a + b).collect());
                let delta = c * &qc;
                let remove = match r.terms.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        v.is_zero()
                    }
                    None => {
                        r.terms.insert(key.clone(), -delta);
                        false
                    }
                };
                if remove {
                    r.terms.remove(&key);
                }
            }
            q.terms.insert(qm, qc);
        }
        q.normalize();
        Ok(q)
    }

    /// Splits `self` as c * fhat with fhat having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(Scalar, MultiPoly), PolyError> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = Scalar::new(num_gcd, den_lcm);
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }

    /// Primitive part with positive leading coefficient (content discarded).
    pub fn primitive_part(&self) -> MultiPoly {
        match self.content_primitive() {
            Ok((_, p)) => p,
            Err(_) => MultiPoly::zero(),
        }
    }

    /// Exact e-th root of a polynomial, when one exists: determines the
    /// root term by term in descending canonical order from the leading
    /// term and the binomial correction.
    pub fn nth_root(&self, e: u32) -> Result<MultiPoly, PolyError> {
        assert!(e >= 1);
        if e == 1 {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        let (lc, lm) = {
            let (c, m) = self.leading().unwrap();
            (c, m)
        };
        // leading coefficient must be an exact e-th power of a rational
        if lc.is_negative() && e % 2 == 0 {
            return Err(PolyError::NoExactRoot);
        }
        let root_num = lc.numer().nth_root(e);
        let root_den = lc.denom().nth_root(e);
        if &num_traits::pow(root_num.clone(), e as usize) != lc.numer()
            || &num_traits::pow(root_den.clone(), e as usize) != lc.denom()
        {
            return Err(PolyError::NoExactRoot);
        }
        let mut lroot: Vec<(Var, u32)> = Vec::new();
        for (v, k) in lm {
            if k % e != 0 {
                return Err(PolyError::NoExactRoot);
            }
            lroot.push((v, k / e));
        }
        let mut s = MultiPoly::monomial(Scalar::new(root_num, root_den), &lroot);
        let lead = s.clone();
        let denom = lead.pow(e - 1).scale(&Scalar::from_int(e as i64));
        let budget = self.num_terms() * (e as usize) + 16;
        for _ in 0..budget {
            let r = self - &s.pow(e);
            if r.is_zero() {
                return Ok(s);
            }
            let (rc, rm) = r.leading().unwrap();
            let (dc, dm) = denom.leading().unwrap();
            // next term = LT(r) / (e * L^(e-1))
            let mut term: Vec<(Var, u32)> = Vec::new();
            let mut dm_map: BTreeMap<Var, u32> = dm.into_iter().collect();
            for (v, k) in rm {
                let dk = dm_map.remove(&v).unwrap_or(0);
                if k < dk {
                    return Err(PolyError::NoExactRoot);
                }
                if k > dk {
                    term.push((v, k - dk));
                }
            }
            if !dm_map.is_empty() {
                return Err(PolyError::NoExactRoot);
            }
            s = &s + &MultiPoly::monomial(&rc / &dc, &term);
        }
        Err(PolyError::NoExactRoot)
    }
}

// ---- operator impls ----

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let vars = self.merged_vars(rhs);
        let mut out = self.with_vars(&vars);
        for (m, c) in rhs.with_vars(&vars).terms {
            let entry = out.terms.entry(m).or_insert_with(Scalar::zero);
            *entry += &c;
        }
        out.normalize();
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let vars = self.merged_vars(rhs);
        let a = self.with_vars(&vars);
        let b = rhs.with_vars(&vars);
        let mut terms: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mono = Mono(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                let entry = terms.entry(mono).or_insert_with(Scalar::zero);
                *entry += &(ca * cb);
            }
        }
        let mut out = MultiPoly { vars, terms };
        out.normalize();
        out
    }
}

/// The part of `f` with X-degree `xd` and Y-degree `yd`.
pub fn bihomogeneous_component(f: &MultiPoly, xd: u32, yd: u32) -> MultiPoly {
    f.component_in(&[(&crate::variable::X_VARS, xd), (&crate::variable::Y_VARS, yd)])
}

/// All monomials of the given total degree in the given variables,
/// listed in descending canonical order (the classical X1^d, X1^(d-1)X2,
/// ... ordering for two variables).
pub fn monomials_of_degree(vars: &[Var], d: u32) -> Vec<MultiPoly> {
    fn rec(vars: &[Var], d: u32, acc: &mut Vec<(Var, u32)>, out: &mut Vec<Vec<(Var, u32)>>) {
        if vars.len() == 1 {
            let mut m = acc.clone();
            m.push((vars[0], d));
            out.push(m);
            return;
        }
        for e in (0..=d).rev() {
            acc.push((vars[0], e));
            rec(&vars[1..], d - e, acc, out);
            acc.pop();
        }
    }
    if vars.is_empty() {
        return if d == 0 { vec![MultiPoly::one()] } else { Vec::new() };
    }
    let mut raw = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|m| MultiPoly::monomial(Scalar::one(), &m)).collect()
}

/// All monomials with degree at most `d` in each listed variable group,
/// as a cartesian product of per-group homogeneous slices.
pub fn monomials_of_degrees(groups: &[(&[Var], u32)]) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::one()];
    for (vars, d) in groups {
        let slice = monomials_of_degree(vars, *d);
        let mut next = Vec::with_capacity(out.len() * slice.len());
        for p in &out {
            for q in &slice {
                next.push(p * q);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variable::Var::*;

    fn x1() -> MultiPoly {
        MultiPoly::var(X1)
    }
    fn x2() -> MultiPoly {
        MultiPoly::var(X2)
    }

    #[test]
    fn arithmetic_basics() {
        let f = &(&x1() * &x1()) - &(&x2() * &x2());
        let g = &x1() - &x2();
        let q = f.exact_divide(&g).unwrap();
        assert_eq!(q, &x1() + &x2());
    }

    #[test]
    fn divide_by_self_is_one() {
        let f = &(&MultiPoly::var(T1) * &x1()) - &(&MultiPoly::var(T2) * &x2());
        assert_eq!(f.exact_divide(&f).unwrap(), MultiPoly::one());
    }

    #[test]
    fn not_divisible_reported() {
        let f = &x1() + &MultiPoly::one();
        let g = &x2() + &MultiPoly::one();
        assert!(matches!(f.exact_divide(&g), Err(PolyError::NotDivisible)));
    }

    #[test]
    fn univariate_exact_division() {
        let t = MultiPoly::var(ParamT);
        let f = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(ParamT, 6)]),
            (Scalar::one(), vec![(ParamT, 4)]),
            (Scalar::one(), vec![(ParamT, 2)]),
            (Scalar::one(), vec![]),
        ]);
        let g = &(&t * &t) + &MultiPoly::one();
        let q = f.exact_divide(&g).unwrap();
        let expect = &(&(&t * &t) * &(&t * &t)) + &MultiPoly::one();
        assert_eq!(q, expect);
    }

    #[test]
    fn content_primitive_examples() {
        let f = &(&x1() * &MultiPoly::from_int(2)) + &(&x2() * &MultiPoly::from_int(4));
        let (c, p) = f.content_primitive().unwrap();
        assert_eq!(c, Scalar::from_int(2));
        assert_eq!(p, &x1() + &(&x2() * &MultiPoly::from_int(2)));

        // sign normalization
        let g = MultiPoly::from_terms(vec![
            (Scalar::from_int(-1), vec![(T1, 3)]),
            (Scalar::one(), vec![(T2, 2), (T3, 1)]),
        ]);
        let (c, p) = g.content_primitive().unwrap();
        assert_eq!(c, Scalar::from_int(-1));
        assert_eq!(
            p,
            MultiPoly::from_terms(vec![
                (Scalar::one(), vec![(T1, 3)]),
                (Scalar::from_int(-1), vec![(T2, 2), (T3, 1)]),
            ])
        );

        let h = MultiPoly::monomial(Scalar::ratio(3, 2), &[(ParamT, 2)]);
        let (c, p) = h.content_primitive().unwrap();
        assert_eq!(c, Scalar::ratio(3, 2));
        assert_eq!(p, MultiPoly::monomial(Scalar::one(), &[(ParamT, 2)]));
    }

    #[test]
    fn bihomogeneous_component_selection() {
        // X1*X2 + X1*Y2 + Y1*X2 + Y1*Y2, component (1,1) in (X, Y)
        let f = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(X1, 1), (X2, 1)]),
            (Scalar::one(), vec![(X1, 1), (Y2, 1)]),
            (Scalar::one(), vec![(Y1, 1), (X2, 1)]),
            (Scalar::one(), vec![(Y1, 1), (Y2, 1)]),
        ]);
        let c = f.component_in(&[(&[X1, X2], 1), (&[Y1, Y2], 1)]);
        let expect = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(X1, 1), (Y2, 1)]),
            (Scalar::one(), vec![(Y1, 1), (X2, 1)]),
        ]);
        assert_eq!(c, expect);
        assert!(MultiPoly::zero().component_in(&[(&[X1, X2], 2)]).is_zero());
    }

    #[test]
    fn bihomogeneous_component_of_morley_square() {
        // morl(X1^2, X2^2) = (X1 + Y1)(X2 + Y2): its (2,0) part is X1 X2
        let m = parse_test("(X1 + Y1)*(X2 + Y2)");
        assert_eq!(bihomogeneous_component(&m, 2, 0), parse_test("X1*X2"));
        assert_eq!(bihomogeneous_component(&m, 1, 1), parse_test("X1*Y2 + X2*Y1"));
    }

    fn parse_test(s: &str) -> MultiPoly {
        crate::text::parse_poly(s).unwrap()
    }

    #[test]
    fn substitution_is_simultaneous() {
        let f = &x1() * &MultiPoly::var(Y1);
        let swapped = f.substitute_many(&[(X1, MultiPoly::var(Y1)), (Y1, x1())]);
        assert_eq!(swapped, f);
    }

    #[test]
    fn nth_root_recovers_square() {
        let c = MultiPoly::from_terms(vec![
            (Scalar::one(), vec![(T1, 2)]),
            (Scalar::from_int(-1), vec![(T2, 1), (T3, 1)]),
        ]);
        let sq = c.pow(2);
        assert_eq!(sq.nth_root(2).unwrap(), c);
        let no = &sq + &MultiPoly::one();
        assert!(no.nth_root(2).is_err());
    }

    #[test]
    fn monomial_enumeration_order() {
        let ms = monomials_of_degree(&[X1, X2], 2);
        let names: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, vec!["X1^2", "X1*X2", "X2^2"]);
    }
}
