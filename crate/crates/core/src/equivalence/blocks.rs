use crate::matrix::{Matrix, MatrixError};

/// The n×n blocks every factor is assembled from.
pub(crate) struct Blocks {
    pub i: Matrix,
    pub zero: Matrix,
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
}

impl Blocks {
    pub fn new(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<Blocks, MatrixError> {
        a.check_compatible(b)?;
        a.check_compatible(x)?;
        Ok(Blocks {
            i: Matrix::identity(a.n(), a.ring()),
            zero: Matrix::zero(a.n(), a.ring()),
            a: a.clone(),
            b: b.clone(),
            x: x.clone(),
        })
    }

    fn block(&self, m11: &Matrix, m12: &Matrix, m21: &Matrix, m22: &Matrix) -> Matrix {
        Matrix::block2x2(m11, m12, m21, m22).expect("blocks share size and ring")
    }

    /// `[[I, −B], [I−AX, A]]`
    pub fn left_factor(&self) -> Matrix {
        self.block(&self.i, &-&self.b, &(&self.i - &(&self.a * &self.x)), &self.a)
    }

    /// `[[I−BX, −B], [I, A]]`
    pub fn right_side(&self) -> Matrix {
        self.block(&(&self.i - &(&self.b * &self.x)), &-&self.b, &self.i, &self.a)
    }

    /// `[[I, 0], [X, I]]`
    pub fn c_x(&self) -> Matrix {
        self.block(&self.i, &self.zero, &self.x, &self.i)
    }

    /// `[[I, B], [0, I]]`
    pub fn c_b(&self) -> Matrix {
        self.block(&self.i, &self.b, &self.zero, &self.i)
    }

    /// `[[I, −B], [0, I]]`
    pub fn c_b_inv(&self) -> Matrix {
        self.block(&self.i, &-&self.b, &self.zero, &self.i)
    }

    /// `[[I, −A], [0, I]]`
    pub fn c_neg_a(&self) -> Matrix {
        self.block(&self.i, &-&self.a, &self.zero, &self.i)
    }

    /// `[[I, 0], [I−AX, I]]`: `[[I, 0], [I−AX, P]] = RowFix1 · diag(I, P)`.
    pub fn row_fix1(&self) -> Matrix {
        self.block(&self.i, &self.zero, &(&self.i - &(&self.a * &self.x)), &self.i)
    }

    /// `[[I, −(I−BX)], [0, I]]`: clears the top-left block of `[[I−BX, −Q], [I, 0]]`.
    pub fn row_fix2(&self) -> Matrix {
        self.block(&self.i, &-&(&self.i - &(&self.b * &self.x)), &self.zero, &self.i)
    }

    /// `[[0, −I], [I, 0]]`, determinant one in every size.
    pub fn swap_j(&self) -> Matrix {
        self.block(&self.zero, &-&self.i, &self.i, &self.zero)
    }

    pub fn swap_j_inv(&self) -> Matrix {
        self.block(&self.zero, &self.i, &-&self.i, &self.zero)
    }

    pub fn block_matrix(&self, m11: &Matrix, m12: &Matrix, m21: &Matrix, m22: &Matrix) -> Matrix {
        self.block(m11, m12, m21, m22)
    }
}

/// `[[I, −B], [I−AX, A]] · [[I, 0], [X, I]] = [[I−BX, −B], [I, A]]`.
pub fn verify_block_identity_24(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<bool, MatrixError> {
    let k = Blocks::new(a, b, x)?;
    Ok(&k.left_factor() * &k.c_x() == k.right_side())
}

/// `[[I, −B], [I−AX, A]] · [[I, B], [0, I]] = [[I, 0], [I−AX, A+B−AXB]]`.
pub fn verify_block_identity_25(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<bool, MatrixError> {
    let k = Blocks::new(a, b, x)?;
    let p = &(a + b) - &(&(a * x) * b);
    let expected = k.block_matrix(&k.i, &k.zero, &(&k.i - &(a * x)), &p);
    Ok(&k.left_factor() * &k.c_b() == expected)
}

/// `[[I−BX, −B], [I, A]] · [[I, −A], [0, I]] = [[I−BX, −(A+B−BXA)], [I, 0]]`.
pub fn verify_block_identity_26(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<bool, MatrixError> {
    let k = Blocks::new(a, b, x)?;
    let q = &(a + b) - &(&(b * x) * a);
    let expected = k.block_matrix(&(&k.i - &(b * x)), &-&q, &k.i, &k.zero);
    Ok(&k.right_side() * &k.c_neg_a() == expected)
}
