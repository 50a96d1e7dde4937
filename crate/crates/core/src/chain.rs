use crate::error::{Error, Result};

/// The finite chain `L_k = {1, ..., k}` under the usual order.
///
/// Elements are 1-based `u32` values throughout the crate; `min`/`max` over
/// nonempty subsets coincide with integer `min`/`max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteChain {
    k: u32,
}

impl FiniteChain {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange {
                value: 0,
                k: 1,
                position: 0,
            });
        }
        Ok(FiniteChain { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Iterates the elements `1..=k` in natural order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = u32> + Clone {
        1..=self.k
    }

    pub fn contains(&self, x: u32) -> bool {
        (1..=self.k).contains(&x)
    }

    /// Validates that every entry of `tuple` lies in `1..=k`, reporting the
    /// first offending 1-based position otherwise.
    pub fn check_tuple(&self, tuple: &[u32]) -> Result<()> {
        for (i, &x) in tuple.iter().enumerate() {
            if !self.contains(x) {
                return Err(Error::OutOfRange {
                    value: x,
                    k: self.k,
                    position: i + 1,
                });
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for FiniteChain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L_{}", self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_chain() {
        assert!(FiniteChain::new(0).is_err());
        assert!(FiniteChain::new(1).is_ok());
    }

    #[test]
    fn tuple_check_names_position() {
        let chain = FiniteChain::new(3).unwrap();
        assert!(chain.check_tuple(&[1, 3, 2]).is_ok());
        match chain.check_tuple(&[1, 4, 2]) {
            Err(Error::OutOfRange { value, position, .. }) => {
                assert_eq!((value, position), (4, 2));
            }
            other => panic!("expected OutOfRange, got {other:?}"),
        }
    }
}
