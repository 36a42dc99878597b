//! Fraction-free exact linear algebra: determinants and minors of
//! matrices with polynomial entries, and rational kernels/solves for
//! graded coefficient matrices.

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum LinAlgError {
    NotSquare,
    ShapeMismatch,
}

impl std::fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinAlgError::NotSquare => write!(f, "matrix is not square"),
            LinAlgError::ShapeMismatch => write!(f, "matrix shape mismatch"),
        }
    }
}

impl std::error::Error for LinAlgError {}

/// Dense matrix of exact polynomials, immutable after construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entries have the wrong length");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    /// Exact determinant: cofactor expansion for dimension <= 4, Bareiss
    /// one-step fraction-free elimination above that. Zero-pivot columns
    /// are handled by row swaps with sign tracking.
    pub fn det(&self) -> Result<MultiPoly, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        if self.rows == 0 {
            return Ok(MultiPoly::one());
        }
        if self.rows <= 4 {
            let rows: Vec<usize> = (0..self.rows).collect();
            let cols: Vec<usize> = (0..self.cols).collect();
            return Ok(self.det_cofactor(&rows, &cols));
        }
        Ok(self.det_bareiss())
    }

    fn det_cofactor(&self, rows: &[usize], cols: &[usize]) -> MultiPoly {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = MultiPoly::zero();
        let sub_rows = &rows[1..];
        for (k, &j) in cols.iter().enumerate() {
            let e = self.get(rows[0], j);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let minor = self.det_cofactor(sub_rows, &rest);
            let signed = if k % 2 == 0 { &acc + &(e * &minor) } else { &acc - &(e * &minor) };
            acc = signed;
        }
        acc
    }

    fn det_bareiss(&self) -> MultiPoly {
        let n = self.rows;
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = MultiPoly::one();
        for k in 0..n - 1 {
            // first nonzero pivot by row-major scan
            let pivot = match (k..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => p,
                None => return MultiPoly::zero(),
            };
            if pivot != k {
                m.swap(k, pivot);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_divide(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = MultiPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign {
            -&det
        } else {
            det
        }
    }

    /// Square submatrix determinant for the given kept rows (all columns).
    pub fn minor_keeping(&self, kept_rows: &[usize]) -> Result<MultiPoly, LinAlgError> {
        if kept_rows.len() != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        let sub = PolyMatrix::from_fn(self.cols, self.cols, |i, j| self.get(kept_rows[i], j).clone());
        sub.det()
    }

    /// All maximal minors obtained by deleting `rows - cols` rows, listed
    /// by deleted-row set in lexicographic order. `threads` > 1 spreads
    /// the determinant work; the output order does not depend on it.
    pub fn maximal_minors(&self, threads: usize) -> Result<Vec<(Vec<usize>, MultiPoly)>, LinAlgError> {
        if self.cols > self.rows {
            return Err(LinAlgError::ShapeMismatch);
        }
        let delete = self.rows - self.cols;
        let sets = combinations(self.rows, delete);
        let kept: Vec<Vec<usize>> = sets
            .iter()
            .map(|del| (0..self.rows).filter(|r| !del.contains(r)).collect())
            .collect();
        let threads = threads.max(1).min(kept.len().max(1));
        let dets: Vec<MultiPoly> = if threads <= 1 || kept.len() <= 1 {
            kept.iter().map(|k| self.minor_keeping(k).expect("square minor")).collect()
        } else {
            let chunk = kept.len().div_ceil(threads);
            let mut out: Vec<Option<MultiPoly>> = vec![None; kept.len()];
            std::thread::scope(|scope| {
                let mut handles = Vec::new();
                for (ci, block) in kept.chunks(chunk).enumerate() {
                    let this = &*self;
                    handles.push((
                        ci,
                        scope.spawn(move || {
                            block
                                .iter()
                                .map(|k| this.minor_keeping(k).expect("square minor"))
                                .collect::<Vec<_>>()
                        }),
                    ));
                }
                for (ci, h) in handles {
                    for (off, d) in h.join().expect("minor worker").into_iter().enumerate() {
                        out[ci * chunk + off] = Some(d);
                    }
                }
            });
            out.into_iter().map(|d| d.unwrap()).collect()
        };
        Ok(sets.into_iter().zip(dets).collect())
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..=n - k {
            acc.push(i);
            rec(i + 1, n, k - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entries have the wrong length");
        QMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot = match (row..m.rows).find(|&i| !m.get(i, col).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(row, j, b);
                    m.set(pivot, j, a);
                }
            }
            let inv = m.get(row, col).recip();
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(row, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel. Each vector is scaled to coprime
    /// integers with a positive first nonzero entry; vectors are listed by
    /// ascending free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            basis.push(normalize_vector(v));
        }
        basis
    }

    /// One exact solution of `self * x = b` when consistent (free
    /// variables set to zero), `None` otherwise.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let aug = QMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Scales a rational vector to coprime integers with a positive first
/// nonzero entry.
pub fn normalize_vector(v: Vec<Scalar>) -> Vec<Scalar> {
    let mut den = BigInt::one();
    for s in &v {
        den = den.lcm(s.denom());
    }
    let mut num = BigInt::zero();
    for s in &v {
        num = num.gcd(&(s.numer() * (&den / s.denom())));
    }
    if num.is_zero() {
        return v;
    }
    let mut scale = Scalar::new(den, num);
    if let Some(first) = v.iter().find(|s| !s.is_zero()) {
        if (first * &scale).is_negative() {
            scale = -scale;
        }
    }
    v.into_iter().map(|s| &s * &scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::scalar::Scalar;
    use crate::variable::Var::*;

    fn c(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn det_identity() {
        let id = PolyMatrix::from_fn(3, 3, |i, j| if i == j { c(1) } else { c(0) });
        assert_eq!(id.det().unwrap(), MultiPoly::one());
    }

    #[test]
    fn det_2x2_symbolic() {
        // [[T1, T2*T3], [-T2, -T1^2]] -> -T1^3 + T2^2*T3
        let m = PolyMatrix::new(
            2,
            2,
            vec![
                MultiPoly::var(T1),
                &MultiPoly::var(T2) * &MultiPoly::var(T3),
                -&MultiPoly::var(T2),
                -&MultiPoly::var(T1).pow(2),
            ],
        );
        let d = m.det().unwrap();
        let expect = MultiPoly::from_terms(vec![
            (Scalar::from_int(-1), vec![(T1, 3)]),
            (Scalar::one(), vec![(T2, 2), (T3, 1)]),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn det_not_square() {
        let m = PolyMatrix::from_fn(2, 3, |_, _| c(1));
        assert!(matches!(m.det(), Err(LinAlgError::NotSquare)));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        // deterministic pseudo-random integer 5x5
        let mut seed = 1234567u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 19) as i64 - 9
        };
        for _ in 0..10 {
            let m = PolyMatrix::from_fn(5, 5, |_, _| c(next()));
            let via_bareiss = m.det_bareiss();
            let rows: Vec<usize> = (0..5).collect();
            let via_cofactor = m.det_cofactor(&rows, &rows);
            assert_eq!(via_bareiss, via_cofactor);
        }
    }

    #[test]
    fn maximal_minors_examples() {
        // 2x1 [a; b] -> [a, b]
        let m = PolyMatrix::new(2, 1, vec![MultiPoly::var(T1), MultiPoly::var(T2)]);
        let minors = m.maximal_minors(1).unwrap();
        assert_eq!(minors.len(), 2);
        assert_eq!(minors[0], (vec![0], MultiPoly::var(T2)));
        assert_eq!(minors[1], (vec![1], MultiPoly::var(T1)));

        // 3x2 [[1,0],[0,1],[0,0]] -> {12: 1, 13: 0, 23: 0} by deleted row
        let m = PolyMatrix::new(3, 2, vec![c(1), c(0), c(0), c(1), c(0), c(0)]);
        let minors = m.maximal_minors(2).unwrap();
        assert_eq!(minors[0], (vec![0], MultiPoly::zero()));
        assert_eq!(minors[1], (vec![1], MultiPoly::zero()));
        assert_eq!(minors[2], (vec![2], MultiPoly::one()));
    }

    #[test]
    fn parallel_minors_match_sequential() {
        let m = PolyMatrix::from_fn(6, 4, |i, j| {
            MultiPoly::from_int(((i * 7 + j * 3) % 11) as i64 - 5)
        });
        let seq = m.maximal_minors(1).unwrap();
        let par = m.maximal_minors(3).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn nullspace_examples() {
        let z = QMatrix::zero(2, 2);
        let basis = z.nullspace();
        assert_eq!(
            basis,
            vec![
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one()],
            ]
        );

        let m = QMatrix::new(1, 2, vec![Scalar::one(), Scalar::one()]);
        assert_eq!(m.nullspace(), vec![vec![Scalar::from_int(1), Scalar::from_int(-1)]]);
    }

    #[test]
    fn nullspace_vectors_satisfy_kernel() {
        let m = QMatrix::new(
            2,
            4,
            vec![1, 2, 3, 4, 2, 4, 6, 9]
                .into_iter()
                .map(Scalar::from_int)
                .collect(),
        );
        let basis = m.nullspace();
        assert_eq!(basis.len(), 4 - m.rank());
        for v in &basis {
            for i in 0..2 {
                let mut acc = Scalar::zero();
                for j in 0..4 {
                    acc += &(m.get(i, j) * &v[j]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn solve_examples() {
        let id = QMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let b = vec![Scalar::from_int(5), Scalar::ratio(1, 3)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let m = QMatrix::new(1, 2, vec![Scalar::one(), Scalar::one()]);
        assert_eq!(
            m.solve(&[Scalar::from_int(2)]).unwrap(),
            vec![Scalar::from_int(2), Scalar::zero()]
        );

        let bad = QMatrix::new(2, 1, vec![Scalar::one(), Scalar::one()]);
        assert!(bad.solve(&[Scalar::from_int(1), Scalar::from_int(2)]).is_none());
    }
}
