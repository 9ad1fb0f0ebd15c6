//! Exact integer substrate: binomial coefficients, 2x2 binomial determinants
//! and determinants of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every count in the crate.
pub type ExactInt = BigInt;

/// `C(n, k)`, with the convention that it vanishes whenever `k < 0`, `k > n`
/// or `n < 0`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The binomial determinant `C(p,t) C(q,u) - C(p,u) C(q,t)`.
pub fn binom_det(p: i64, q: i64, t: i64, u: i64) -> ExactInt {
    binomial(p, t) * binomial(q, u) - binomial(p, u) * binomial(q, t)
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactInt>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::BadMatrixShape {
                rows,
                cols,
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<T: Into<ExactInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadMatrixShape {
                rows: r,
                cols: c,
                expected: r * c,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ExactInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<IntMatrix> {
        if let Some(&i) = rows.iter().find(|&&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {i}")));
        }
        if let Some(&j) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {j}")));
        }
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        IntMatrix::new(rows.len(), cols.len(), entries)
    }
}

/// Exact determinant. Cofactor expansion up to 4x4, Bareiss fraction-free
/// elimination above.
pub fn det(m: &IntMatrix) -> Result<ExactInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let grid = m.to_rows();
    Ok(if m.rows <= 4 { cofactor(&grid) } else { bareiss(grid) })
}

fn cofactor(a: &[Vec<ExactInt>]) -> ExactInt {
    match a.len() {
        1 => a[0][0].clone(),
        2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
        n => {
            let mut acc = ExactInt::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ExactInt>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &a[0][j] * cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn bareiss(mut a: Vec<Vec<ExactInt>>) -> ExactInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = ExactInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ExactInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// JSON encoding rule for exact integers: native numbers up to `2^53 - 1` in
/// magnitude, decimal strings beyond.
pub mod json {
    use super::*;
    use serde::ser::SerializeSeq;

    pub const MAX_SAFE: i64 = (1 << 53) - 1;

    pub fn int<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) if x.abs() <= MAX_SAFE => s.serialize_i64(x),
            _ => s.serialize_str(&v.to_string()),
        }
    }

    pub fn ints<S: Serializer>(v: &[ExactInt], s: S) -> Result<S::Ok, S::Error> {
        struct One<'a>(&'a ExactInt);
        impl serde::Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                int(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&One(x))?;
        }
        seq.end()
    }

    pub fn opt_int<S: Serializer>(v: &Option<ExactInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => int(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn is_safe(v: &ExactInt) -> bool {
        v.abs() <= ExactInt::from(MAX_SAFE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), b(10));
        assert_eq!(binomial(3, 7), b(0));
        assert_eq!(binomial(11, 1), b(11));
        assert_eq!(binomial(-1, 0), b(0));
        assert_eq!(binomial(4, -1), b(0));
        assert_eq!(binomial(0, 0), b(1));
    }

    #[test]
    fn binomial_is_exact_at_200_choose_100() {
        let expected: ExactInt = "90548514656103281165404177077484163874504589675413336841320"
            .parse()
            .unwrap();
        assert_eq!(binomial(200, 100), expected);
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 0..=60 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if n >= 1 {
                    assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
                }
            }
        }
    }

    #[test]
    fn binom_det_examples() {
        assert_eq!(binom_det(1, 2, 0, 1), b(1));
        assert_eq!(binom_det(2, 3, 1, 2), b(3));
        for p in 0..10 {
            for t in 0..5 {
                for u in 0..5 {
                    assert_eq!(binom_det(p, p, t, u), b(0));
                }
            }
        }
    }

    #[test]
    fn binom_det_is_a_two_by_two_determinant() {
        for p in 0..=12 {
            for q in 0..=12 {
                for t in 0..=12 {
                    for u in 0..=12 {
                        let m = IntMatrix::from_rows(&[
                            vec![binomial(p, t), binomial(p, u)],
                            vec![binomial(q, t), binomial(q, u)],
                        ])
                        .unwrap();
                        assert_eq!(binom_det(p, q, t, u), det(&m).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn det_examples() {
        let one = IntMatrix::from_rows(&[vec![1]]).unwrap();
        assert_eq!(det(&one).unwrap(), b(1));
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![3, 3]]).unwrap();
        assert_eq!(det(&m).unwrap(), b(3));
        let m = IntMatrix::from_rows(&[vec![11, 55], vec![1, 10]]).unwrap();
        assert_eq!(det(&m).unwrap(), b(55));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(det(&m), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = IntMatrix::from_rows(&[
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
        ])
        .unwrap();
        // reversal of 5 elements is an even permutation
        assert_eq!(det(&m).unwrap(), b(1));
        let singular = IntMatrix::from_rows(&[
            vec![1, 2, 3, 4, 5],
            vec![2, 4, 6, 8, 10],
            vec![0, 1, 0, 1, 0],
            vec![3, 1, 4, 1, 5],
            vec![9, 2, 6, 5, 3],
        ])
        .unwrap();
        assert_eq!(det(&singular).unwrap(), b(0));
    }

    #[test]
    fn matrix_shape_errors() {
        assert!(IntMatrix::new(0, 1, vec![]).is_err());
        assert!(IntMatrix::new(2, 2, vec![b(1)]).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(m.submatrix(&[0, 2], &[0]).is_err());
    }

    fn leibniz(a: &[Vec<i64>]) -> ExactInt {
        let n = a.len();
        let mut total = ExactInt::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        heap_permutations(n, &mut perm, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = ExactInt::one();
            for (i, &j) in p.iter().enumerate() {
                term *= a[i][j];
            }
            if inversions % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        });
        total
    }

    fn heap_permutations(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(p);
            return;
        }
        for i in 0..k {
            heap_permutations(k - 1, p, f);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }

    proptest! {
        #[test]
        fn det_agrees_with_permutation_expansion(
            n in 1usize..=6,
            seed in proptest::collection::vec(-50i64..=50, 36),
        ) {
            let grid: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 6..i * 6 + n].to_vec()).collect();
            let m = IntMatrix::from_rows(&grid).unwrap();
            prop_assert_eq!(det(&m).unwrap(), leibniz(&grid));
        }
    }
}
