use crate::chain::FiniteChain;
use crate::error::{Error, Result};

/// An alternative linear order on the chain, given as the permutation
/// `a_1 < a_2 < ... < a_k` (smallest first). `rank` is the inverse
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrdering {
    chain: FiniteChain,
    seq: Vec<u32>,
    rank: Vec<usize>,
}

impl LinearOrdering {
    pub fn new(chain: FiniteChain, seq: Vec<u32>) -> Result<Self> {
        let k = chain.k();
        if seq.len() != k as usize {
            return Err(Error::NotAPermutation {
                k,
                reason: format!("length {} != {}", seq.len(), k),
            });
        }
        let mut rank = vec![usize::MAX; k as usize];
        for (i, &x) in seq.iter().enumerate() {
            if !chain.contains(x) {
                return Err(Error::NotAPermutation {
                    k,
                    reason: format!("entry {x} out of range"),
                });
            }
            if rank[x as usize - 1] != usize::MAX {
                return Err(Error::NotAPermutation {
                    k,
                    reason: format!("entry {x} repeated"),
                });
            }
            rank[x as usize - 1] = i;
        }
        Ok(LinearOrdering { chain, seq, rank })
    }

    /// The identity ordering `1 < 2 < ... < k` (the natural order).
    pub fn natural(chain: FiniteChain) -> Self {
        LinearOrdering::new(chain, chain.elements().collect()).expect("natural order is valid")
    }

    pub fn chain(&self) -> FiniteChain {
        self.chain
    }

    /// The permutation, smallest element first.
    pub fn seq(&self) -> &[u32] {
        &self.seq
    }

    /// 0-based position of `x` in the ordering.
    pub fn rank(&self, x: u32) -> usize {
        self.rank[x as usize - 1]
    }

    /// The minimal element of the ordering.
    pub fn minimum(&self) -> u32 {
        self.seq[0]
    }

    /// `x <= y` in this ordering.
    pub fn leq(&self, x: u32, y: u32) -> Result<bool> {
        self.chain.check_tuple(&[x, y])?;
        Ok(self.rank(x) <= self.rank(y))
    }

    /// The larger of `x` and `y` in this ordering (assumes valid elements).
    pub fn join(&self, x: u32, y: u32) -> u32 {
        if self.rank(x) <= self.rank(y) {
            y
        } else {
            x
        }
    }

    /// The larger element of a nonempty tuple in this ordering.
    pub fn max_of(&self, tuple: &[u32]) -> u32 {
        tuple
            .iter()
            .copied()
            .max_by_key(|&x| self.rank(x))
            .expect("nonempty tuple")
    }
}

impl std::fmt::Display for LinearOrdering {
    /// Comma-separated permutation, e.g. `3,2,4,1`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(k: u32, seq: &[u32]) -> LinearOrdering {
        LinearOrdering::new(FiniteChain::new(k).unwrap(), seq.to_vec()).unwrap()
    }

    #[test]
    fn leq_examples() {
        let o = ord(4, &[3, 2, 4, 1]);
        assert!(o.leq(3, 1).unwrap()); // rank 0 vs rank 3
        assert!(o.leq(2, 2).unwrap());
        let natural = ord(3, &[1, 2, 3]);
        assert!(!natural.leq(3, 2).unwrap());
    }

    #[test]
    fn totality() {
        let o = ord(4, &[3, 2, 4, 1]);
        for x in 1..=4 {
            for y in 1..=4 {
                if x != y {
                    assert_ne!(o.leq(x, y).unwrap(), o.leq(y, x).unwrap());
                }
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        let chain = FiniteChain::new(3).unwrap();
        assert!(LinearOrdering::new(chain, vec![1, 2]).is_err());
        assert!(LinearOrdering::new(chain, vec![1, 2, 2]).is_err());
        assert!(LinearOrdering::new(chain, vec![1, 2, 4]).is_err());
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(ord(4, &[3, 2, 4, 1]).to_string(), "3,2,4,1");
    }
}
