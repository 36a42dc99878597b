//! Univariate and bivariate polynomial utilities: Euclidean gcds over Q,
//! Yun squarefree decomposition, rational root extraction, and a
//! primitive-PRS gcd for polynomials in one main variable with univariate
//! polynomial coefficients (used for generic-fiber degree computations).

use crate::poly::{MultiPoly, PolyError};
use crate::scalar::Scalar;
use crate::variable::Var;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Scalar coefficient list of a univariate polynomial, lowest power first.
pub fn scalar_coeffs(f: &MultiPoly, v: Var) -> Result<Vec<Scalar>, PolyError> {
    f.coeffs_in(v)
        .into_iter()
        .map(|c| c.as_scalar().ok_or(PolyError::NotUnivariate))
        .collect()
}

pub fn degree(f: &MultiPoly, v: Var) -> usize {
    f.degree_in(&[v]) as usize
}

/// Remainder of univariate division over Q.
pub fn uni_rem(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let dg = degree(g, v);
    let lg = g.coeffs_in(v)[dg].as_scalar().expect("univariate divisor");
    let mut r = f.clone();
    while !r.is_zero() && degree(&r, v) >= dg {
        let dr = degree(&r, v);
        let lr = r.coeffs_in(v)[dr].as_scalar().expect("univariate dividend");
        let t = MultiPoly::monomial(&lr / &lg, &[(v, (dr - dg) as u32)]);
        r = &r - &(&t * g);
        if dg == 0 {
            return MultiPoly::zero();
        }
    }
    r
}

/// Monic-normalized gcd of two univariate polynomials over Q, returned
/// primitive with positive leading coefficient.
pub fn uni_gcd(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = uni_rem(&a, &b, v);
        a = b;
        b = r;
    }
    if a.is_zero() {
        MultiPoly::zero()
    } else {
        a.primitive_part()
    }
}

pub fn uni_gcd_many(polys: &[MultiPoly], v: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { p.primitive_part() } else { uni_gcd(&acc, p, v) };
        if acc.is_constant() && !acc.is_zero() {
            return MultiPoly::one();
        }
    }
    acc
}

/// Yun squarefree decomposition over Q: `f = gamma * prod f_i^{e_i}` with
/// the `f_i` squarefree, pairwise coprime, primitive with positive leading
/// coefficient.
pub fn squarefree_decomposition(
    f: &MultiPoly,
    v: Var,
) -> Result<(Scalar, Vec<(MultiPoly, u32)>), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    scalar_coeffs(f, v)?;
    if degree(f, v) == 0 {
        return Ok((f.as_scalar().unwrap(), Vec::new()));
    }
    let df = f.derivative(v);
    let g = uni_gcd(f, &df, v);
    let mut factors: Vec<(MultiPoly, u32)> = Vec::new();
    let mut c = f.exact_divide(&g).expect("gcd divides");
    let mut d = &df.exact_divide(&g).expect("gcd divides f'") - &c.derivative(v);
    let mut i = 1u32;
    while degree(&c, v) > 0 {
        let fi = uni_gcd(&c, &d, v);
        if degree(&fi, v) > 0 {
            factors.push((fi.primitive_part(), i));
        }
        c = c.exact_divide(&fi).expect("factor divides");
        d = &d.exact_divide(&fi).expect("factor divides d") - &c.derivative(v);
        i += 1;
    }
    // the unit is whatever scalar remains after dividing out the factors
    let mut prod = MultiPoly::one();
    for (fi, e) in &factors {
        prod = &prod * &fi.pow(*e);
    }
    let gamma = f
        .exact_divide(&prod)
        .expect("reconstruction")
        .as_scalar()
        .ok_or(PolyError::NotUnivariate)?;
    Ok((gamma, factors))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    if let Some(m) = n.to_u64() {
        let mut i = 1u64;
        while i.saturating_mul(i) <= m {
            if m % i == 0 {
                out.push(BigInt::from(i));
                if i != m / i {
                    out.push(BigInt::from(m / i));
                }
            }
            i += 1;
        }
    } else {
        let mut i = BigInt::from(1u32);
        let stop = n.sqrt();
        while i <= stop {
            if (&n % &i).is_zero() {
                out.push(i.clone());
                let j = &n / &i;
                if j != i {
                    out.push(j);
                }
            }
            i += 1;
        }
    }
    out.sort();
    out
}

/// All rational roots of a univariate polynomial, with multiplicities,
/// sorted ascending. Candidates come from divisors of the extreme integer
/// coefficients and are verified by exact evaluation; multiplicities by
/// repeated exact division.
pub fn rational_roots(f: &MultiPoly, v: Var) -> Result<Vec<(Scalar, u32)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let coeffs = scalar_coeffs(f, v)?;
    let mut roots: Vec<(Scalar, u32)> = Vec::new();
    // strip the power of v dividing f: root at 0
    let trail = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    if trail > 0 {
        roots.push((Scalar::zero(), trail as u32));
    }
    let mut work = f
        .exact_divide(&MultiPoly::monomial(Scalar::one(), &[(v, trail as u32)]))
        .expect("trailing power divides");
    if degree(&work, v) == 0 {
        return Ok(roots);
    }
    let prim = work.primitive_part();
    let c = scalar_coeffs(&prim, v)?;
    let a0 = c.first().unwrap().numer().clone();
    let an = c.last().unwrap().numer().clone();
    let mut candidates: Vec<Scalar> = Vec::new();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            let r = Scalar::new(p.clone(), q.clone());
            if !candidates.contains(&r) {
                candidates.push(r.clone());
            }
            let neg = -r;
            if !candidates.contains(&neg) {
                candidates.push(neg);
            }
        }
    }
    candidates.sort();
    for r in candidates {
        if work.eval_univariate(v, &r)?.is_zero() {
            let lin = &MultiPoly::var(v) - &MultiPoly::constant(r.clone());
            let mut mult = 0u32;
            while let Ok(q) = work.exact_divide(&lin) {
                work = q;
                mult += 1;
            }
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

/// Multiplicity of `at` as a root of the univariate polynomial `f`;
/// `None` when `f` is identically zero (infinite order).
pub fn root_multiplicity(f: &MultiPoly, v: Var, at: &Scalar) -> Option<u32> {
    if f.is_zero() {
        return None;
    }
    let lin = &MultiPoly::var(v) - &MultiPoly::constant(at.clone());
    let mut work = f.clone();
    let mut mult = 0u32;
    while let Ok(q) = work.exact_divide(&lin) {
        work = q;
        mult += 1;
    }
    Some(mult)
}

/// Content of `f` with respect to `main`: the gcd of its coefficient
/// polynomials (which must be univariate in a common variable, or
/// constants).
fn content_wrt(f: &MultiPoly, main: Var) -> MultiPoly {
    let coeffs: Vec<MultiPoly> = f.coeffs_in(main).into_iter().filter(|c| !c.is_zero()).collect();
    if coeffs.is_empty() {
        return MultiPoly::zero();
    }
    let mut other = None;
    for c in &coeffs {
        for &v in c.vars() {
            if other.is_none() {
                other = Some(v);
            } else if other != Some(v) {
                // multivariate coefficients: fall back to trivial content
                return MultiPoly::one();
            }
        }
    }
    match other {
        None => MultiPoly::one(),
        Some(v) => uni_gcd_many(&coeffs, v),
    }
}

fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, main: Var) -> MultiPoly {
    let db = degree(b, main);
    let lb = b.coeffs_in(main)[db].clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = degree(&r, main);
        if dr < db {
            break;
        }
        let lr = r.coeffs_in(main)[dr].clone();
        let shift = MultiPoly::monomial(Scalar::one(), &[(main, (dr - db) as u32)]);
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    r
}

/// Gcd of two polynomials viewed in `main` with polynomial coefficients,
/// via the primitive polynomial remainder sequence. The result is
/// primitive with respect to `main`; its degree in `main` is the gcd
/// degree over the coefficient fraction field.
pub fn gcd_bivariate(f: &MultiPoly, g: &MultiPoly, main: Var) -> MultiPoly {
    let prim = |p: &MultiPoly| -> MultiPoly {
        if p.is_zero() {
            return MultiPoly::zero();
        }
        let c = content_wrt(p, main);
        if c.is_zero() || c.is_constant() {
            return p.primitive_part();
        }
        p.exact_divide(&c).expect("content divides").primitive_part()
    };
    let mut a = prim(f);
    let mut b = prim(g);
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    if degree(&a, main) < degree(&b, main) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && degree(&b, main) > 0 {
        let r = prim(&pseudo_rem(&a, &b, main));
        a = b;
        b = r;
    }
    if b.is_zero() {
        prim(&a)
    } else {
        MultiPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variable::Var::{ParamS, ParamT};

    fn t() -> MultiPoly {
        MultiPoly::var(ParamT)
    }

    fn poly(coeffs: &[i64]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            acc = &acc + &MultiPoly::monomial(Scalar::from_int(c), &[(ParamT, k as u32)]);
        }
        acc
    }

    #[test]
    fn squarefree_examples() {
        // t^2 -> [(t, 2)]
        let (g, fs) = squarefree_decomposition(&poly(&[0, 0, 1]), ParamT).unwrap();
        assert_eq!(g, Scalar::one());
        assert_eq!(fs, vec![(t(), 2)]);

        // t^2 - 1 is already squarefree
        let (_, fs) = squarefree_decomposition(&poly(&[-1, 0, 1]), ParamT).unwrap();
        assert_eq!(fs, vec![(poly(&[-1, 0, 1]), 1)]);

        // t^6 + t^4 + t^2 + 1: gcd(f, f') = 1
        let f = poly(&[1, 0, 1, 0, 1, 0, 1]);
        let (_, fs) = squarefree_decomposition(&f, ParamT).unwrap();
        assert_eq!(fs, vec![(f.clone(), 1)]);

        // multiplicity mix reconstructs
        let f = &poly(&[1, 1]).pow(3) * &poly(&[-2, 1]);
        let (g, fs) = squarefree_decomposition(&f, ParamT).unwrap();
        let mut recon = MultiPoly::constant(g);
        for (p, e) in &fs {
            recon = &recon * &p.pow(*e);
        }
        assert_eq!(recon, f);
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                assert!(uni_gcd(&fs[i].0, &fs[j].0, ParamT).is_constant());
            }
        }
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(
            rational_roots(&poly(&[0, 0, 1]), ParamT).unwrap(),
            vec![(Scalar::zero(), 2)]
        );
        assert_eq!(
            rational_roots(&poly(&[-1, 0, 1]), ParamT).unwrap(),
            vec![(Scalar::from_int(-1), 1), (Scalar::from_int(1), 1)]
        );
        assert!(rational_roots(&poly(&[1, 0, 0, 0, 1]), ParamT).unwrap().is_empty());
        // fractional root 2/3 of (3t-2)^2(t+5)
        let f = &poly(&[-2, 3]).pow(2) * &poly(&[5, 1]);
        let roots = rational_roots(&f, ParamT).unwrap();
        assert_eq!(roots, vec![(Scalar::from_int(-5), 1), (Scalar::ratio(2, 3), 2)]);
    }

    #[test]
    fn bivariate_gcd_generic_fiber() {
        // cusp cross polynomials have gcd of degree 1 in t
        let s = MultiPoly::var(ParamS);
        let h12 = &(&t().pow(2) * &s.pow(3)) - &(&t().pow(3) * &s.pow(2));
        let h13 = &t().pow(2) - &s.pow(2);
        let h23 = &t().pow(3) - &s.pow(3);
        let g = gcd_bivariate(&gcd_bivariate(&h12, &h13, ParamT), &h23, ParamT);
        assert_eq!(degree(&g, ParamT), 1);
    }
}
