//! Jordan block profiles of unipotent operators in characteristic `p`.

use std::sync::Arc;

use serde::Serialize;

use super::matrix::GfMatrix;
use crate::error::{Error, Result};
use crate::prime::Prime;

/// Multiplicities `b_1, .., b_p` of Jordan blocks of sizes `1..=p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JordanProfile {
    p: Prime,
    blocks: Vec<usize>,
}

impl JordanProfile {
    pub fn p(&self) -> Prime {
        self.p
    }

    /// `blocks()[j - 1]` is the number of blocks of size `j`.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().enumerate().map(|(j, &b)| (j + 1) * b).sum()
    }

    /// Free over `F[u]/(u-1)^p`: every block has size `p`.
    pub fn is_projective(&self) -> bool {
        self.blocks[..self.blocks.len() - 1].iter().all(|&b| b == 0)
    }
}

/// Profile of `m` from the ranks of powers of `m - 1`.
pub fn jordan_profile(m: &GfMatrix, p: Prime) -> Result<JordanProfile> {
    profile_of_nilpotent(&m.minus_identity(), p)
}

/// Profile of `1 + n` for `n` with `n^p = 0`.
pub fn profile_of_nilpotent(n: &GfMatrix, p: Prime) -> Result<JordanProfile> {
    let pp = p.get() as usize;
    let ranks = nilpotent_ranks(n, pp);
    if ranks[pp] != 0 {
        return Err(Error::NotUnipotent(p.get()));
    }
    let r = |j: usize| if j <= pp { ranks[j] } else { 0 };
    let blocks = (1..=pp).map(|j| r(j - 1) + r(j + 1) - 2 * r(j)).collect();
    Ok(JordanProfile { p, blocks })
}

/// `rank(n^p - 1) * p == dim`, the projectivity test without the full profile.
pub fn is_projective_by_rank(n: &GfMatrix, p: Prime) -> bool {
    let pp = p.get() as usize;
    let ranks = nilpotent_ranks(n, pp - 1);
    ranks[pp - 1] * pp == n.rows()
}

/// `[rank n^0, rank n^1, .., rank n^top]`.
fn nilpotent_ranks(n: &GfMatrix, top: usize) -> Vec<usize> {
    let mut ranks = Vec::with_capacity(top + 1);
    ranks.push(n.rows());
    let mut power = GfMatrix::identity(Arc::clone(n.field()), n.rows());
    for _ in 0..top {
        power = power.mul(n);
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            ranks.resize(top + 1, 0);
            break;
        }
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::GaloisField;

    fn field(p: u64) -> Arc<GaloisField> {
        Arc::new(GaloisField::new(Prime::new(p).unwrap(), 1).unwrap())
    }

    fn cycle(f: &Arc<GaloisField>, d: usize) -> GfMatrix {
        let mut c = GfMatrix::zeros(f.clone(), d, d);
        for i in 0..d {
            c.set((i + 1) % d, i, 1);
        }
        c
    }

    #[test]
    fn identity_and_regular() {
        let p3 = Prime::new(3).unwrap();
        let f = field(3);
        let id = GfMatrix::identity(f.clone(), 4);
        let prof = jordan_profile(&id, p3).unwrap();
        assert_eq!(prof.blocks(), &[4, 0, 0]);
        assert!(!prof.is_projective());

        let reg = jordan_profile(&cycle(&f, 3), p3).unwrap();
        assert_eq!(reg.blocks(), &[0, 0, 1]);
        assert!(reg.is_projective());
        assert!(is_projective_by_rank(&cycle(&f, 3).minus_identity(), p3));
    }

    #[test]
    fn mixed_blocks() {
        let p2 = Prime::new(2).unwrap();
        let f = field(2);
        let m = cycle(&f, 2).direct_sum(&GfMatrix::identity(f.clone(), 1));
        let prof = jordan_profile(&m, p2).unwrap();
        assert_eq!(prof.blocks(), &[1, 1]);
        assert_eq!(prof.dimension(), 3);
        assert!(!is_projective_by_rank(&m.minus_identity(), p2));
    }

    #[test]
    fn rejects_non_unipotent() {
        let f = field(3);
        // a 4-cycle has order prime to 3
        let err = jordan_profile(&cycle(&f, 4), Prime::new(3).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotUnipotent(3));
    }
}
