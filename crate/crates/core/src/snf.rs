//! Exact integer matrices and Smith normal form.
//!
//! All arithmetic is checked; a coefficient outside `i64` range aborts with
//! [`SnfError::ArithmeticOverflow`] rather than wrapping. The pivot rule is
//! smallest nonzero absolute value, which keeps coefficient growth tame on
//! the desk-scale matrices this crate produces.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SnfError {
    #[error("integer overflow during exact elimination")]
    ArithmeticOverflow,
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row_slice(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, SnfError> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b == 0 {
                        continue;
                    }
                    let prod = a.checked_mul(b).ok_or(SnfError::ArithmeticOverflow)?;
                    let sum =
                        out.get(r, c).checked_add(prod).ok_or(SnfError::ArithmeticOverflow)?;
                    out.set(r, c, sum);
                }
            }
        }
        Ok(out)
    }
}

/// Result of `u * mat * v = d` with `u`, `v` unimodular and `d` diagonal
/// with the divisibility chain `d1 | d2 | ...`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonnegative diagonal entries, including trailing zeros.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i)).collect()
    }
}

struct Eliminator {
    m: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Eliminator {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.m.cols {
            let t = self.m.get(a, c);
            self.m.set(a, c, self.m.get(b, c));
            self.m.set(b, c, t);
        }
        if let Some(u) = &mut self.u {
            for c in 0..u.cols {
                let t = u.get(a, c);
                u.set(a, c, u.get(b, c));
                u.set(b, c, t);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.m.rows {
            let t = self.m.get(r, a);
            self.m.set(r, a, self.m.get(r, b));
            self.m.set(r, b, t);
        }
        if let Some(v) = &mut self.v {
            for r in 0..v.rows {
                let t = v.get(r, a);
                v.set(r, a, v.get(r, b));
                v.set(r, b, t);
            }
        }
    }

    /// row a -= q * row b
    fn row_op(&mut self, a: usize, b: usize, q: i64) -> Result<(), SnfError> {
        if q == 0 {
            return Ok(());
        }
        for c in 0..self.m.cols {
            let x = self.m.get(b, c);
            if x != 0 {
                let sub = q.checked_mul(x).ok_or(SnfError::ArithmeticOverflow)?;
                let val = self.m.get(a, c).checked_sub(sub).ok_or(SnfError::ArithmeticOverflow)?;
                self.m.set(a, c, val);
            }
        }
        if let Some(u) = &mut self.u {
            for c in 0..u.cols {
                let x = u.get(b, c);
                if x != 0 {
                    let sub = q.checked_mul(x).ok_or(SnfError::ArithmeticOverflow)?;
                    let val = u.get(a, c).checked_sub(sub).ok_or(SnfError::ArithmeticOverflow)?;
                    u.set(a, c, val);
                }
            }
        }
        Ok(())
    }

    /// col a -= q * col b
    fn col_op(&mut self, a: usize, b: usize, q: i64) -> Result<(), SnfError> {
        if q == 0 {
            return Ok(());
        }
        for r in 0..self.m.rows {
            let x = self.m.get(r, b);
            if x != 0 {
                let sub = q.checked_mul(x).ok_or(SnfError::ArithmeticOverflow)?;
                let val = self.m.get(r, a).checked_sub(sub).ok_or(SnfError::ArithmeticOverflow)?;
                self.m.set(r, a, val);
            }
        }
        if let Some(v) = &mut self.v {
            for r in 0..v.rows {
                let x = v.get(r, b);
                if x != 0 {
                    let sub = q.checked_mul(x).ok_or(SnfError::ArithmeticOverflow)?;
                    let val = v.get(r, a).checked_sub(sub).ok_or(SnfError::ArithmeticOverflow)?;
                    v.set(r, a, val);
                }
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.m.cols {
            self.m.set(r, c, -self.m.get(r, c));
        }
        if let Some(u) = &mut self.u {
            for c in 0..u.cols {
                u.set(r, c, -u.get(r, c));
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing block, if any.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i64)> = None;
        for r in k..self.m.rows {
            for c in k..self.m.cols {
                let v = self.m.get(r, c).abs();
                if v == 0 {
                    continue;
                }
                if v == 1 {
                    return Some((r, c));
                }
                match best {
                    Some((_, _, b)) if b <= v => {}
                    _ => best = Some((r, c, v)),
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn reduce(&mut self) -> Result<usize, SnfError> {
        let n = self.m.rows.min(self.m.cols);
        let mut k = 0;
        while k < n {
            let Some((pr, pc)) = self.pivot(k) else { break };
            self.swap_rows(k, pr);
            self.swap_cols(k, pc);
            loop {
                let p = self.m.get(k, k);
                debug_assert_ne!(p, 0);
                let mut dirty = false;
                for r in k + 1..self.m.rows {
                    let x = self.m.get(r, k);
                    if x != 0 {
                        let q = x.div_euclid(p);
                        self.row_op(r, k, q)?;
                        if self.m.get(r, k) != 0 {
                            dirty = true;
                        }
                    }
                }
                for c in k + 1..self.m.cols {
                    let x = self.m.get(k, c);
                    if x != 0 {
                        let q = x.div_euclid(p);
                        self.col_op(c, k, q)?;
                        if self.m.get(k, c) != 0 {
                            dirty = true;
                        }
                    }
                }
                if !dirty {
                    break;
                }
                // a remainder smaller than the pivot appeared; re-pivot
                let (pr, pc) = self.pivot(k).expect("nonzero block");
                self.swap_rows(k, pr);
                self.swap_cols(k, pc);
            }
            if self.m.get(k, k) < 0 {
                self.negate_row(k);
            }
            k += 1;
        }
        Ok(k)
    }

    /// Enforce d1 | d2 | ... on the diagonal after reduction.
    fn fix_divisibility(&mut self, rank: usize) -> Result<(), SnfError> {
        loop {
            let mut changed = false;
            for i in 0..rank.saturating_sub(1) {
                let a = self.m.get(i, i);
                let b = self.m.get(i + 1, i + 1);
                if b % a != 0 {
                    // fold d_{i+1} into position i and re-diagonalize the 2x2 block
                    self.col_op(i, i + 1, -1)?; // col i += col i+1
                    loop {
                        let p = self.m.get(i, i);
                        let x = self.m.get(i + 1, i);
                        if x == 0 {
                            break;
                        }
                        let q = x.div_euclid(p);
                        self.row_op(i + 1, i, q)?;
                        if self.m.get(i + 1, i) != 0 {
                            self.swap_rows(i, i + 1);
                        }
                    }
                    // clear the fill-in at (i, i+1)
                    loop {
                        let p = self.m.get(i, i);
                        let x = self.m.get(i, i + 1);
                        if x == 0 {
                            break;
                        }
                        let q = x.div_euclid(p);
                        self.col_op(i + 1, i, q)?;
                        if self.m.get(i, i + 1) != 0 {
                            self.swap_cols(i, i + 1);
                        }
                    }
                    if self.m.get(i, i) < 0 {
                        self.negate_row(i);
                    }
                    if self.m.get(i + 1, i + 1) < 0 {
                        self.negate_row(i + 1);
                    }
                    changed = true;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }
}

/// Smith normal form with unimodular transforms: `u * mat * v = d`.
pub fn smith_normal_form(mat: &IntMatrix) -> Result<SmithDecomposition, SnfError> {
    let mut e = Eliminator {
        m: mat.clone(),
        u: Some(IntMatrix::identity(mat.rows())),
        v: Some(IntMatrix::identity(mat.cols())),
    };
    let rank = e.reduce()?;
    e.fix_divisibility(rank)?;
    Ok(SmithDecomposition { u: e.u.unwrap(), d: e.m, v: e.v.unwrap() })
}

/// Diagonal of the Smith form without transform tracking (faster).
pub fn smith_diagonal(mat: &IntMatrix) -> Result<Vec<i64>, SnfError> {
    let mut e = Eliminator { m: mat.clone(), u: None, v: None };
    let rank = e.reduce()?;
    e.fix_divisibility(rank)?;
    Ok((0..mat.rows().min(mat.cols())).map(|i| e.m.get(i, i)).collect())
}

/// Rank over the rationals, via the Smith diagonal.
pub fn rank(mat: &IntMatrix) -> Result<usize, SnfError> {
    Ok(smith_diagonal(mat)?.into_iter().filter(|&d| d != 0).count())
}

/// Invariant factors >= 2 from a Smith diagonal.
pub fn torsion_factors(diagonal: &[i64]) -> Vec<u64> {
    diagonal.iter().filter(|&&d| d.abs() >= 2).map(|&d| d.unsigned_abs()).collect()
}

/// Structure of a finitely generated abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    /// Invariant factors d1 | d2 | ..., each >= 2.
    pub torsion: Vec<u64>,
}

impl AbelianGroupStructure {
    pub fn trivial() -> Self {
        AbelianGroupStructure { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupStructure { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order when finite, None otherwise.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().map(|&d| d as u128).product())
    }

    /// Merge per-prime elementary divisors `p^e` into invariant factors.
    ///
    /// `parts` holds, per prime, the exponent multiset of that primary
    /// component. Factors are aligned from the largest down so the
    /// divisibility chain holds.
    pub fn from_primary_parts(free_rank: usize, parts: &[(u64, Vec<u32>)]) -> Self {
        let max_len = parts.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        let mut torsion = vec![1u64; max_len];
        for (p, es) in parts {
            let mut es = es.clone();
            es.retain(|&e| e > 0);
            es.sort_unstable();
            // align the largest exponents with the last invariant factors
            for (i, &e) in es.iter().rev().enumerate() {
                let idx = max_len - 1 - i;
                torsion[idx] *= p.pow(e);
            }
        }
        torsion.retain(|&d| d > 1);
        AbelianGroupStructure { free_rank, torsion }
    }
}

impl std::fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det_i128(m: &IntMatrix) -> i128 {
        // fraction-free expansion; fine for test-sized matrices
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> =
            (0..n).map(|r| (0..n).map(|c| m.get(r, c) as i128).collect()).collect();
        let mut det: i128 = 1;
        for k in 0..n {
            let pivot = (k..n).find(|&r| a[r][k] != 0);
            let Some(p) = pivot else { return 0 };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            for r in k + 1..n {
                while a[r][k] != 0 {
                    let q = a[k][k] / a[r][k];
                    for c in k..n {
                        a[k][c] -= q * a[r][c];
                    }
                    a.swap(k, r);
                    det = -det;
                }
            }
            det *= a[k][k];
        }
        det
    }

    #[test]
    fn identity_and_zero() {
        let i3 = IntMatrix::identity(3);
        let s = smith_normal_form(&i3).unwrap();
        assert_eq!(s.diagonal(), vec![1, 1, 1]);
        let z = IntMatrix::zero(2, 3);
        let s = smith_normal_form(&z).unwrap();
        assert_eq!(s.diagonal(), vec![0, 0]);
    }

    #[test]
    fn worked_example() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diagonal(), vec![2, 4]);
        let prod = s.u.mul(&m).unwrap().mul(&s.v).unwrap();
        assert_eq!(prod, s.d);
        assert_eq!(det_i128(&s.u).abs(), 1);
        assert_eq!(det_i128(&s.v).abs(), 1);
    }

    #[test]
    fn divisibility_chain_enforced() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diagonal(), vec![1, 6]);
    }

    #[test]
    fn primary_merge() {
        // Z/2 + Z/4 + Z/3 -> invariant factors 2 | 12
        let s = AbelianGroupStructure::from_primary_parts(0, &[(2, vec![1, 2]), (3, vec![1])]);
        assert_eq!(s.torsion, vec![2, 12]);
        let s = AbelianGroupStructure::from_primary_parts(0, &[(2, vec![1]), (3, vec![1])]);
        assert_eq!(s.torsion, vec![6]);
    }

    proptest! {
        #[test]
        fn smith_properties(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            // small pseudo-random matrix from the seed
            let mut state = seed | 1;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) as i64 % 7) - 3
            };
            let m = IntMatrix::from_rows(
                (0..rows).map(|_| (0..cols).map(|_| next()).collect()).collect(),
            );
            let s = smith_normal_form(&m).unwrap();
            // u * m * v = d
            prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
            // diagonal, nonnegative, divisibility chain
            let diag = s.diagonal();
            for r in 0..s.d.rows() {
                for c in 0..s.d.cols() {
                    if r != c {
                        prop_assert_eq!(s.d.get(r, c), 0);
                    }
                }
            }
            for w in diag.windows(2) {
                prop_assert!(w[0] >= 0 && w[1] >= 0);
                if w[0] != 0 {
                    prop_assert_eq!(w[1] % w[0], 0);
                } else {
                    prop_assert_eq!(w[1], 0);
                }
            }
            prop_assert_eq!(det_i128(&s.u).abs(), 1);
            prop_assert_eq!(det_i128(&s.v).abs(), 1);
        }
    }
}
