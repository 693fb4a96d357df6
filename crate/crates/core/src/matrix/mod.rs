//! Dense square matrices over a [`Ring`].

mod det;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::ring::{Ring, RingElement, RingError};

pub use det::{
    algorithm, algorithms, charpoly, det_bareiss, det_berkowitz, det_cofactor, Bareiss, Berkowitz, CharPoly, Cofactor,
    DeterminantAlgorithm,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("entry ({row}, {col}) does not belong to {ring}")]
    ForeignEntry { row: usize, col: usize, ring: String },
    #[error("index ({0}, {1}) out of range for dimension {2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("determinant {0} is not a unit")]
    NotInvertible(RingElement),
    #[error("{algorithm} does not support {ring}")]
    Unsupported { algorithm: &'static str, ring: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug)]
pub struct Matrix {
    n: usize,
    entries: Vec<RingElement>,
    ring: Ring,
}

impl Matrix {
    pub fn from_fn(n: usize, ring: &Ring, mut f: impl FnMut(usize, usize) -> RingElement) -> Matrix {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix {
            n,
            entries,
            ring: ring.clone(),
        }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Matrix, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::Ragged { row: i, len: row.len(), n });
            }
            for (j, e) in row.into_iter().enumerate() {
                if !e.belongs_to(ring) {
                    return Err(MatrixError::ForeignEntry {
                        row: i,
                        col: j,
                        ring: ring.to_string(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            n,
            entries,
            ring: ring.clone(),
        })
    }

    /// Integer-literal rows mapped into `ring`.
    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Result<Matrix, MatrixError> {
        let rows = rows.iter().map(|r| r.iter().map(|&k| ring.from_i64(k)).collect()).collect();
        Self::from_rows(ring, rows)
    }

    pub fn zero(n: usize, ring: &Ring) -> Matrix {
        let z = ring.zero();
        Self::from_fn(n, ring, |_, _| z.clone())
    }

    pub fn identity(n: usize, ring: &Ring) -> Matrix {
        let (z, o) = (ring.zero(), ring.one());
        Self::from_fn(n, ring, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn scalar(n: usize, s: &RingElement) -> Matrix {
        let ring = s.ring();
        let z = ring.zero();
        Self::from_fn(n, &ring, |i, j| if i == j { s.clone() } else { z.clone() })
    }

    pub fn diag(ring: &Ring, d: &[RingElement]) -> Matrix {
        let z = ring.zero();
        Self::from_fn(d.len(), ring, |i, j| if i == j { d[i].clone() } else { z.clone() })
    }

    /// Matrix unit E_ij with 1-based indices.
    pub fn unit(n: usize, i: usize, j: usize, ring: &Ring) -> Result<Matrix, MatrixError> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(MatrixError::IndexOutOfRange(i, j, n));
        }
        let (z, o) = (ring.zero(), ring.one());
        Ok(Self::from_fn(n, ring, |r, c| if r + 1 == i && c + 1 == j { o.clone() } else { z.clone() }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingElement]> {
        self.entries.chunks(self.n)
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        assert!(v.belongs_to(&self.ring), "entry from a foreign ring");
        self.entries[i * self.n + j] = v;
    }

    pub fn map(&self, ring: &Ring, mut f: impl FnMut(&RingElement) -> RingElement) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(&mut f).collect(),
            ring: ring.clone(),
        }
    }

    /// Entry-wise image under a fallible ring map.
    pub fn try_map(
        &self,
        ring: &Ring,
        mut f: impl FnMut(&RingElement) -> Result<RingElement, RingError>,
    ) -> Result<Matrix, MatrixError> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(ring, entries.chunks(self.n).map(<[_]>::to_vec).collect())
    }

    pub fn embed_into(&self, ring: &Ring) -> Result<Matrix, MatrixError> {
        self.try_map(ring, |e| e.embed_into(ring))
    }

    pub fn check_compatible(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(self.n, other.n));
        }
        if self.ring != other.ring {
            return Err(MatrixError::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&RingElement, &RingElement) -> RingElement) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
            ring: self.ring.clone(),
        }
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_compatible(other)?;
        let n = self.n;
        Ok(Matrix::from_fn(n, &self.ring, |i, j| {
            let mut acc: Option<RingElement> = None;
            for k in 0..n {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let t = a * b;
                acc = Some(match acc {
                    None => t,
                    Some(s) => &s + &t,
                });
            }
            acc.unwrap_or_else(|| self.ring.zero())
        }))
    }

    pub fn neg(&self) -> Matrix {
        self.map(&self.ring.clone(), |e| -e)
    }

    pub fn scale(&self, s: &RingElement) -> Matrix {
        self.map(&self.ring.clone(), |e| s * e)
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.n, &self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, &self.ring, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> RingElement {
        (0..self.n).fold(self.ring.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    /// Determinant by the default strategy: cofactor expansion for n ≤ 3 over
    /// rings without zero divisors, Berkowitz otherwise.
    pub fn det(&self) -> RingElement {
        let strategy: &dyn DeterminantAlgorithm = if self.n <= 3 && self.ring.is_integral_domain() {
            &Cofactor
        } else {
            &Berkowitz
        };
        strategy.determinant(self).expect("division-free strategies accept every ring")
    }

    /// Square submatrix keeping the listed rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        assert_eq!(rows.len(), cols.len());
        Matrix::from_fn(rows.len(), &self.ring, |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn minor(&self, row: usize, col: usize) -> Matrix {
        let rows: Vec<usize> = (0..self.n).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.n).filter(|&c| c != col).collect();
        self.select(&rows, &cols)
    }

    /// Classical adjoint; `M · adj(M) = det(M) · I` over any commutative ring.
    pub fn adjugate(&self) -> Matrix {
        let n = self.n;
        if n == 1 {
            return Matrix::identity(1, &self.ring);
        }
        Matrix::from_fn(n, &self.ring, |i, j| {
            let d = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let d = self.det();
        let inv = d.inverse().map_err(|_| MatrixError::NotInvertible(d.clone()))?;
        Ok(self.adjugate().scale(&inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    pub fn is_sl(&self) -> bool {
        self.det().is_one()
    }

    /// The 2n×2n matrix `[[m11, m12], [m21, m22]]`.
    pub fn block2x2(m11: &Matrix, m12: &Matrix, m21: &Matrix, m22: &Matrix) -> Result<Matrix, MatrixError> {
        for m in [m12, m21, m22] {
            m11.check_compatible(m)?;
        }
        let n = m11.n;
        Ok(Matrix::from_fn(2 * n, &m11.ring, |i, j| {
            let block = match (i < n, j < n) {
                (true, true) => m11,
                (true, false) => m12,
                (false, true) => m21,
                (false, false) => m22,
            };
            block.get(i % n, j % n).clone()
        }))
    }

    /// The four n×n blocks of a 2n×2n matrix.
    pub fn blocks(&self) -> Option<[Matrix; 4]> {
        if self.n % 2 != 0 {
            return None;
        }
        let h = self.n / 2;
        let sub = |r0: usize, c0: usize| Matrix::from_fn(h, &self.ring, |i, j| self.get(r0 + i, c0 + j).clone());
        Some([sub(0, 0), sub(0, h), sub(h, 0), sub(h, h)])
    }

    /// `diag(self, I_k)`.
    pub fn suspend(&self, k: usize) -> Matrix {
        let n = self.n;
        let (z, o) = (self.ring.zero(), self.ring.one());
        Matrix::from_fn(n + k, &self.ring, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (false, false) if i == j => o.clone(),
            _ => z.clone(),
        })
    }

    /// Largest monomial count among the entries.
    pub fn max_entry_size(&self) -> usize {
        self.entries.iter().map(RingElement::size).max().unwrap_or(0)
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ring == other.ring && self.entries == other.entries
    }
}

impl Eq for Matrix {}

/// Matrix literal `[[e, e], [e, e]]`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

macro_rules! matrix_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Matrix> for &'a Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &'a Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

matrix_op!(Add, add, checked_add);
matrix_op!(Sub, sub, checked_sub);
matrix_op!(Mul, mul, checked_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    #[test]
    fn matrix_units_multiply() {
        let r = z();
        let e11 = Matrix::unit(2, 1, 1, &r).unwrap();
        let e12 = Matrix::unit(2, 1, 2, &r).unwrap();
        assert_eq!(&e11 * &e12, e12);
        assert!((&e12 * &e11).is_zero());
        assert_eq!(e11, Matrix::from_i64(&r, &[&[1, 0], &[0, 0]]).unwrap());
        assert_eq!(e12, Matrix::from_i64(&r, &[&[0, 1], &[0, 0]]).unwrap());
        assert!(Matrix::unit(2, 3, 1, &r).is_err());
        assert!(Matrix::unit(2, 0, 1, &r).is_err());
    }

    #[test]
    fn axb_of_matrix_units_is_s_e11() {
        let r = Ring::polynomial(["s"]);
        let s = r.var(0).unwrap();
        let a = Matrix::unit(2, 1, 1, &r).unwrap();
        let x = Matrix::unit(2, 1, 2, &r).unwrap();
        let b = Matrix::unit(2, 2, 1, &r).unwrap().scale(&s);
        assert_eq!(b, Matrix::from_rows(&r, vec![vec![r.zero(), r.zero()], vec![s.clone(), r.zero()]]).unwrap());
        let axb = &(&a * &x) * &b;
        assert_eq!(axb, a.scale(&s));
        assert_eq!(axb.trace(), s);
    }

    #[test]
    fn determinant_fixtures() {
        let r = z();
        assert!(Matrix::identity(4, &r).det().is_one());
        let zx = Ring::polynomial(["x"]);
        let x = zx.var(0).unwrap();
        let two = zx.from_i64(2);
        let p = Matrix::from_rows(
            &zx,
            vec![vec![zx.zero(), two.clone()], vec![zx.zero(), &(&two * &x) - &(&x * &x)]],
        )
        .unwrap();
        assert!(p.det().is_zero());
        let zy = Ring::polynomial(["y"]);
        let y = zy.var(0).unwrap();
        let m = Matrix::from_rows(
            &zy,
            vec![vec![zy.from_i64(-1), &zy.from_i64(2) - &y], vec![zy.one(), zy.zero()]],
        )
        .unwrap();
        assert_eq!(m.det(), &y - &zy.from_i64(2));
    }

    #[test]
    fn trace_examples() {
        let r = Ring::modular(5).unwrap();
        assert_eq!(Matrix::identity(3, &r).trace(), r.from_i64(3));
    }

    #[test]
    fn adjugate_and_inverse() {
        let r = Ring::polynomial(["a", "b", "c", "d"]);
        let v: Vec<_> = (0..4).map(|i| r.var(i).unwrap()).collect();
        let m = Matrix::from_rows(&r, vec![vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]]).unwrap();
        let expected = Matrix::from_rows(&r, vec![vec![v[3].clone(), -&v[1]], vec![-&v[2], v[0].clone()]]).unwrap();
        assert_eq!(m.adjugate(), expected);
        assert!(matches!(m.inverse(), Err(MatrixError::NotInvertible(_))));
        assert_eq!(Matrix::identity(3, &z()).inverse().unwrap(), Matrix::identity(3, &z()));

        let f = Ring::fraction_of(r.clone()).unwrap();
        let mf = m.embed_into(&f).unwrap();
        let inv = mf.inverse().unwrap();
        assert_eq!(&mf * &inv, Matrix::identity(2, &f));
        assert_eq!(&inv * &mf, Matrix::identity(2, &f));
    }

    #[test]
    fn invertibility_depends_on_the_ring() {
        let m = Matrix::from_i64(&z(), &[&[2, 0], &[0, 3]]).unwrap();
        assert!(!m.is_invertible());
        let z7 = Ring::modular(7).unwrap();
        let m7 = Matrix::from_i64(&z7, &[&[2, 0], &[0, 3]]).unwrap();
        assert!(m7.is_invertible());
        assert!(!m7.is_sl());
        let inv = m7.inverse().unwrap();
        assert_eq!(&m7 * &inv, Matrix::identity(2, &z7));
    }

    #[test]
    fn block_assembly_and_suspension() {
        let r = z();
        let i = Matrix::identity(2, &r);
        let o = Matrix::zero(2, &r);
        assert_eq!(Matrix::block2x2(&i, &o, &o, &i).unwrap(), Matrix::identity(4, &r));
        let x = Matrix::from_i64(&r, &[&[1, 2], &[3, 4]]).unwrap();
        let lower = Matrix::block2x2(&i, &o, &x, &i).unwrap();
        assert_eq!(lower.get(2, 1), &r.from_i64(2));
        assert_eq!(lower.get(0, 2), &r.zero());
        assert_eq!(lower.blocks().unwrap()[2], x);
        assert!(Matrix::block2x2(&i, &o, &Matrix::identity(3, &r), &i).is_err());

        assert_eq!(i.suspend(3), Matrix::identity(5, &r));
        let s = x.suspend(2);
        assert_eq!(s.n(), 4);
        assert_eq!(s.det(), x.det());
    }

    #[test]
    fn mismatches_are_reported() {
        let a = Matrix::identity(2, &z());
        let b = Matrix::identity(3, &z());
        assert_eq!(a.checked_add(&b), Err(MatrixError::DimensionMismatch(2, 3)));
        let c = Matrix::identity(2, &Ring::modular(3).unwrap());
        assert!(matches!(a.checked_mul(&c), Err(MatrixError::RingMismatch(..))));
        let ragged = Matrix::from_rows(&z(), vec![vec![z().one()], vec![z().one(), z().one()]]);
        assert!(matches!(ragged, Err(MatrixError::Ragged { .. })));
    }
}
