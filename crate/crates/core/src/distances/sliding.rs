//! Truncated sliding matrices `G_j^c` and `H_j^c`.

use crate::convcode::ConvCode;
use crate::error::Result;
use crate::linsys::Matrix;
use crate::polymat::PolyMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlidingKind {
    Generator,
    Parity,
}

/// Upper block-Toeplitz matrix whose block `(s, t)` is `M_{t-s}` for
/// `t >= s` and zero below the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingMatrix {
    kind: SlidingKind,
    j: usize,
    blocks: Vec<Matrix>,
    matrix: Matrix,
}

impl SlidingMatrix {
    /// `G_j^c`, of shape `k(j+1) × n(j+1)`.
    pub fn generator(code: &ConvCode, j: usize) -> Self {
        Self::from_poly_matrix(code.encoder(), j, SlidingKind::Generator)
    }

    /// `H_j^c` built from the n × (n-k) parity check, of shape
    /// `n(j+1) × (n-k)(j+1)`, so that `[w_0 … w_j] · H_j^c = 0` on codewords.
    pub fn parity(code: &ConvCode, j: usize) -> Result<Self> {
        Ok(Self::from_poly_matrix(code.parity_check()?, j, SlidingKind::Parity))
    }

    pub fn from_poly_matrix(m: &PolyMatrix, j: usize, kind: SlidingKind) -> Self {
        let blocks: Vec<Matrix> = (0..=j).map(|i| m.coefficient_block(i)).collect();
        let (br, bc) = (m.rows(), m.cols());
        let mut matrix = Matrix::zeros(m.ring(), br * (j + 1), bc * (j + 1));
        for s in 0..=j {
            for t in s..=j {
                let b = &blocks[t - s];
                for r in 0..br {
                    for c in 0..bc {
                        matrix.set(s * br + r, t * bc + c, b.get(r, c));
                    }
                }
            }
        }
        Self {
            kind,
            j,
            blocks,
            matrix,
        }
    }

    pub fn kind(&self) -> SlidingKind {
        self.kind
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Coefficient blocks `M_0 … M_j`, zero past the degree of `M`.
    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}
