//! Exact integer and rational matrix arithmetic.
//!
//! Everything here is arbitrary precision; there is no floating point in
//! this crate. Determinants and ranks use fraction-free (Bareiss)
//! elimination, kernels come from a column-style Hermite normal form, so
//! the returned lattice is saturated by construction.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        let cols = columns.len();
        for col in columns {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column length {} does not match row count {}",
                    col.len(),
                    rows
                )));
            }
        }
        let mut m = IntMatrix::zero(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Submatrix picking the given rows and columns, in the given order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zero(row_idx.len(), col_idx.len());
        for (i, &ri) in row_idx.iter().enumerate() {
            for (j, &cj) in col_idx.iter().enumerate() {
                *m.at_mut(i, j) = self.at(ri, cj).clone();
            }
        }
        m
    }

    pub fn select_columns(&self, col_idx: &[usize]) -> IntMatrix {
        let all_rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all_rows, col_idx)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *m.at_mut(i, j) = acc;
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} does not match column count {}",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect())
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact by Bareiss
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Rank over the rationals, by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let r = self.rows;
        let c = self.cols;
        let mut a: Vec<Vec<BigInt>> = (0..r).map(|i| self.row(i)).collect();
        let mut col_of: Vec<usize> = (0..c).collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        while rank < r && rank < c {
            // find any nonzero pivot in the trailing block
            let mut pivot = None;
            'outer: for i in rank..r {
                for j in rank..c {
                    if !a[i][col_of[j]].is_zero() {
                        pivot = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(rank, pi);
            col_of.swap(rank, pj);
            let pc = col_of[rank];
            for i in rank + 1..r {
                for j in rank + 1..c {
                    let cj = col_of[j];
                    let num = &a[rank][pc] * &a[i][cj] - &a[i][pc] * &a[rank][cj];
                    a[i][cj] = num / &prev;
                }
                a[i][pc] = BigInt::zero();
            }
            prev = a[rank][pc].clone();
            rank += 1;
        }
        rank
    }

    /// Z-basis of the saturated integer kernel, as matrix columns.
    ///
    /// Column operations reduce `self` to column echelon form while the same
    /// operations are applied to an identity matrix; the trailing columns of
    /// the transformation span exactly `{v in Z^n : M v = 0}`, so the result
    /// is saturated and every column is primitive. Full-rank input yields a
    /// matrix with zero columns.
    pub fn kernel_basis(&self) -> IntMatrix {
        let m = self.rows;
        let n = self.cols;
        let mut w: Vec<Vec<BigInt>> = (0..m).map(|i| self.row(i)).collect();
        let mut u: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let swap_cols = |w: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
            for row in w.iter_mut() {
                row.swap(a, b);
            }
            for row in u.iter_mut() {
                row.swap(a, b);
            }
        };
        // col_b -= q * col_a
        let shear = |w: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, b: usize, q: &BigInt, a: usize| {
            for row in w.iter_mut() {
                let d = q * &row[a];
                row[b] -= d;
            }
            for row in u.iter_mut() {
                let d = q * &row[a];
                row[b] -= d;
            }
        };
        let mut pivot = 0usize;
        for r in 0..m {
            if pivot == n {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for j in pivot..n {
                    if !w[r][j].is_zero() {
                        best = match best {
                            Some(b) if w[r][b].abs() <= w[r][j].abs() => Some(b),
                            _ => Some(j),
                        };
                    }
                }
                let Some(jmin) = best else { break };
                if jmin != pivot {
                    swap_cols(&mut w, &mut u, jmin, pivot);
                }
                let mut clean = true;
                for j in pivot + 1..n {
                    if !w[r][j].is_zero() {
                        let q = &w[r][j] / &w[r][pivot]; // truncating
                        if !q.is_zero() {
                            shear(&mut w, &mut u, j, &q, pivot);
                        }
                        if !w[r][j].is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if !w[r][pivot].is_zero() {
                pivot += 1;
            }
        }
        let mut cols: Vec<Vec<BigInt>> = (pivot..n)
            .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
            .collect();
        for col in cols.iter_mut() {
            canonicalize_sign(col);
        }
        IntMatrix::from_columns(n, &cols).expect("kernel columns have length n")
    }

    /// gcd of all maximal (cols x cols) minors; 0 iff rank deficient.
    pub fn gcd_maximal_minors(&self) -> Result<BigInt> {
        if self.rows < self.cols {
            return Err(Error::Dimension(format!(
                "gcd of maximal minors needs rows >= cols, got {}x{}",
                self.rows, self.cols
            )));
        }
        let all_cols: Vec<usize> = (0..self.cols).collect();
        let mut g = BigInt::zero();
        for rows in (0..self.rows).combinations(self.cols) {
            let d = self.submatrix(&rows, &all_cols).det()?;
            g = g.gcd(&d);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// Text interchange format: a `rows cols` header line, then one line per
    /// row of space-separated integers; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<IntMatrix> {
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let stripped = l.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                None
            } else {
                Some((i + 1, stripped))
            }
        });
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty matrix file".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: hline,
                msg: format!("expected header `rows cols`, got `{header}`"),
            });
        }
        let parse_dim = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: hline,
                msg: format!("bad dimension `{s}`"),
            })
        };
        let rows = parse_dim(dims[0])?;
        let cols = parse_dim(dims[1])?;
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (lno, line) = lines.next().ok_or(Error::Parse {
                line: hline,
                msg: format!("expected {rows} rows of entries"),
            })?;
            let row: Vec<&str> = line.split_whitespace().collect();
            if row.len() != cols {
                return Err(Error::Parse {
                    line: lno,
                    msg: format!("expected {cols} entries, got {}", row.len()),
                });
            }
            for tok in row {
                entries.push(tok.parse::<BigInt>().map_err(|_| Error::Parse {
                    line: lno,
                    msg: format!("bad integer `{tok}`"),
                })?);
            }
        }
        if let Some((lno, extra)) = lines.next() {
            return Err(Error::Parse {
                line: lno,
                msg: format!("unexpected trailing content `{extra}`"),
            });
        }
        IntMatrix::new(rows, cols, entries)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntMatrix {}x{}\n{}", self.rows, self.cols, self.to_text())
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Vector of rationals kept in lowest terms (num-rational normalizes).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatVector {
    entries: Vec<BigRational>,
}

impl RatVector {
    pub fn from_int(v: &[BigInt]) -> Self {
        RatVector {
            entries: v.iter().map(|x| BigRational::from(x.clone())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.entries[i].is_zero()).collect()
    }

    pub fn positive_support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i].is_positive()).collect()
    }

    pub fn negative_support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i].is_negative()).collect()
    }

    /// self -= q * w
    pub fn sub_scaled(&mut self, q: &BigRational, w: &[BigInt]) {
        assert_eq!(self.len(), w.len());
        for (e, wi) in self.entries.iter_mut().zip(w) {
            *e -= q * BigRational::from(wi.clone());
        }
    }
}

/// Incremental rational column-echelon state with stack discipline.
///
/// `try_insert` reduces a column against the current basis; an independent
/// column is normalized and pushed, a dependent one leaves the state
/// untouched. `pop` undoes the most recent insert.
pub struct RationalEchelon {
    dim: usize,
    basis: Vec<(usize, Vec<BigRational>)>,
}

impl RationalEchelon {
    pub fn new(dim: usize) -> Self {
        RationalEchelon { dim, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn residual(&self, col: &[BigInt]) -> Vec<BigRational> {
        let mut v: Vec<BigRational> = col.iter().map(|x| BigRational::from(x.clone())).collect();
        for (p, b) in &self.basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= &f * bi;
                }
            }
        }
        v
    }

    pub fn is_independent(&self, col: &[BigInt]) -> bool {
        self.residual(col).iter().any(|x| !x.is_zero())
    }

    pub fn try_insert(&mut self, col: &[BigInt]) -> bool {
        assert_eq!(col.len(), self.dim);
        let mut v = self.residual(col);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for vi in v.iter_mut() {
            *vi /= &lead;
        }
        self.basis.push((p, v));
        true
    }

    pub fn pop(&mut self) {
        self.basis.pop();
    }
}

/// v divided by the gcd of its entries; sign unchanged.
pub fn primitive_part(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = vector_gcd(v);
    if g.is_zero() {
        return Err(Error::Domain("primitive part of the zero vector".into()));
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn vector_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Flip the vector so its first nonzero entry is positive. Returns true if
/// it was negated.
pub fn canonicalize_sign(v: &mut [BigInt]) -> bool {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -std::mem::take(x);
            }
            return true;
        }
    }
    false
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Binomial coefficient C(n, k) as u128 (saturating is fine at desk scale).
pub fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn big_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent determinant oracle: cofactor expansion along row 0.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = det_cofactor(&m.submatrix(&rows, &cols));
            let term = m.at(0, j) * minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_identity_and_2x2() {
        assert_eq!(IntMatrix::identity(2).det().unwrap(), BigInt::from(1));
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-2));
    }

    #[test]
    fn det_vandermonde() {
        // t = (0, 2, 3): product formula (2-0)(3-0)(3-2) = 6
        let m = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 2, 3], &[0, 4, 9]]);
        assert_eq!(m.det().unwrap(), BigInt::from(6));
    }

    #[test]
    fn det_non_square_is_error() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn det_matches_cofactor_oracle_randomized() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=4);
            let mut m = IntMatrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    *m.at_mut(i, j) = BigInt::from(rng.gen_range(-5i64..=5));
                }
            }
            assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::zero(2, 3).rank(), 0);
        let m = IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_basis_twisted_cubic_span() {
        let a = IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
        // span equality against the reference basis, both containments by rank
        let reference = IntMatrix::from_i64(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]]);
        let mut joint_cols = k.columns();
        joint_cols.extend(reference.columns());
        let joint = IntMatrix::from_columns(4, &joint_cols).unwrap();
        assert_eq!(joint.rank(), 2);
        // saturation: gcd of maximal minors of the kernel is 1
        assert_eq!(k.gcd_maximal_minors().unwrap(), BigInt::one());
        assert_eq!(reference.gcd_maximal_minors().unwrap(), BigInt::one());
    }

    #[test]
    fn kernel_basis_trivial_cases() {
        assert_eq!(IntMatrix::identity(2).kernel_basis().cols(), 0);
        let m = IntMatrix::from_i64(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn kernel_basis_randomized_invariants() {
        let mut rng = StdRng::seed_from_u64(0xbeef);
        for _ in 0..200 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=6);
            let mut a = IntMatrix::zero(m, n);
            for i in 0..m {
                for j in 0..n {
                    *a.at_mut(i, j) = BigInt::from(rng.gen_range(-4i64..=4));
                }
            }
            let k = a.kernel_basis();
            assert!(a.mul(&k).unwrap().is_zero());
            assert_eq!(k.cols(), n - a.rank());
            assert_eq!(k.rank(), k.cols());
            if k.cols() > 0 {
                assert_eq!(k.gcd_maximal_minors().unwrap(), BigInt::one());
                for j in 0..k.cols() {
                    let col = k.column(j);
                    assert_eq!(primitive_part(&col).unwrap(), col);
                }
            }
        }
    }

    #[test]
    fn gcd_maximal_minors_examples() {
        let m = IntMatrix::from_i64(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]]);
        assert_eq!(m.gcd_maximal_minors().unwrap(), BigInt::from(1));
        let m = IntMatrix::from_i64(&[&[2], &[-2], &[0]]);
        assert_eq!(m.gcd_maximal_minors().unwrap(), BigInt::from(2));
        // rank deficient tall matrix
        let m = IntMatrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(m.gcd_maximal_minors().unwrap(), BigInt::from(0));
        let wide = IntMatrix::from_i64(&[&[1, 2, 3]]);
        assert!(matches!(wide.gcd_maximal_minors(), Err(Error::Dimension(_))));
    }

    #[test]
    fn primitive_part_examples() {
        let v: Vec<BigInt> = [2, -6, 6, -2].iter().map(|&x| BigInt::from(x)).collect();
        let expect: Vec<BigInt> = [1, -3, 3, -1].iter().map(|&x| BigInt::from(x)).collect();
        let p = primitive_part(&v).unwrap();
        assert_eq!(p, expect);
        // idempotent
        assert_eq!(primitive_part(&p).unwrap(), p);
        let v: Vec<BigInt> = [0, 0, 5].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(
            primitive_part(&v).unwrap(),
            vec![BigInt::zero(), BigInt::zero(), BigInt::one()]
        );
        assert!(primitive_part(&[BigInt::zero()]).is_err());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let text = "# twisted cubic\n2 4\n1 1 1 1\n0 1 2 3\n";
        let m = IntMatrix::parse_text(text).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 4);
        let again = IntMatrix::parse_text(&m.to_text()).unwrap();
        assert_eq!(m, again);
        assert!(matches!(
            IntMatrix::parse_text("2 4\n1 1 1\n0 1 2 3\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(IntMatrix::parse_text(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn choose_and_big_binomial() {
        assert_eq!(choose(91, 3), 121_485);
        assert_eq!(choose(14, 12), 91);
        assert_eq!(big_binomial(22, 4), BigInt::from(7315));
    }

    #[test]
    fn rational_echelon_stack_discipline() {
        let c1: Vec<BigInt> = [1, -2, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        let c2: Vec<BigInt> = [2, -4, 2, 0].iter().map(|&x| BigInt::from(x)).collect();
        let c3: Vec<BigInt> = [0, 1, -2, 1].iter().map(|&x| BigInt::from(x)).collect();
        let mut e = RationalEchelon::new(4);
        assert!(e.try_insert(&c1));
        assert!(!e.try_insert(&c2));
        assert!(e.try_insert(&c3));
        assert_eq!(e.rank(), 2);
        e.pop();
        assert_eq!(e.rank(), 1);
        assert!(e.try_insert(&c3));
    }
}
