use crate::chain::FiniteChain;
use crate::error::{Error, Result};

/// The nonincreasing map `g: {1,...,e} -> {e,...,k}` with `g(e) = e` that
/// parameterizes idempotent n-ary uninorms on finite chains, together with
/// its neutral element `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GMap {
    chain: FiniteChain,
    e: u32,
    g: Vec<u32>,
}

impl GMap {
    pub fn new(chain: FiniteChain, e: u32, g: Vec<u32>) -> Result<Self> {
        if !chain.contains(e) {
            return Err(Error::InvalidGMap(format!(
                "neutral element {e} out of range 1..={}",
                chain.k()
            )));
        }
        if g.len() != e as usize {
            return Err(Error::InvalidGMap(format!(
                "domain must be {{1,...,{e}}}, got {} values",
                g.len()
            )));
        }
        for (i, &v) in g.iter().enumerate() {
            if v < e || v > chain.k() {
                return Err(Error::InvalidGMap(format!(
                    "g({}) = {v} outside {{{}..{}}}",
                    i + 1,
                    e,
                    chain.k()
                )));
            }
        }
        if g[e as usize - 1] != e {
            return Err(Error::InvalidGMap(format!(
                "g({e}) = {} but must equal {e}",
                g[e as usize - 1]
            )));
        }
        for w in g.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidGMap(format!(
                    "not nonincreasing: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(GMap { chain, e, g })
    }

    pub fn chain(&self) -> FiniteChain {
        self.chain
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `g(x)` for `x` in `1..=e`.
    pub fn g(&self, x: u32) -> u32 {
        self.g[x as usize - 1]
    }

    pub fn g_values(&self) -> &[u32] {
        &self.g
    }

    /// The extension of `g` to the whole chain:
    /// `g(x)` below `e`, the largest preimage `max{z <= e : g(z) >= x}` on
    /// `e..=g(1)`, and `1` above `g(1)`. Returned as the vector of values at
    /// `1..=k`.
    pub fn gbar(&self) -> Vec<u32> {
        let k = self.chain.k();
        let g1 = self.g(1);
        (1..=k)
            .map(|x| {
                if x <= self.e {
                    self.g(x)
                } else if x <= g1 {
                    // z = 1 always qualifies here because g(1) >= x.
                    (1..=self.e)
                        .filter(|&z| self.g(z) >= x)
                        .max()
                        .expect("g(1) >= x guarantees a qualifying z")
                } else {
                    1
                }
            })
            .collect()
    }

    /// Enumerates every valid g-map on the chain, grouped by neutral element
    /// ascending, maps in lexicographically decreasing value order within one
    /// neutral element. There are exactly `2^(k-1)` in total.
    pub fn enumerate_all(chain: FiniteChain) -> Vec<GMap> {
        let k = chain.k();
        let mut out = Vec::new();
        for e in 1..=k {
            // free part: nonincreasing g(1) >= ... >= g(e-1), values in e..=k
            let mut prefix: Vec<u32> = Vec::new();
            fill(chain, e, k, &mut prefix, &mut out);
        }
        out
    }
}

fn fill(chain: FiniteChain, e: u32, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<GMap>) {
    if prefix.len() == e as usize - 1 {
        let mut g = prefix.clone();
        g.push(e);
        out.push(GMap::new(chain, e, g).expect("constructed g-map is valid"));
        return;
    }
    let upper = prefix.last().copied().unwrap_or(k);
    for v in (e..=upper).rev() {
        prefix.push(v);
        fill(chain, e, k, prefix, out);
        prefix.pop();
    }
}

impl std::fmt::Display for GMap {
    /// `e=<e>; g=<g(1)>,...,<g(e)>`
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e={}; g=", self.e)?;
        for (i, v) in self.g.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: u32) -> FiniteChain {
        FiniteChain::new(k).unwrap()
    }

    #[test]
    fn gbar_examples() {
        let gm = GMap::new(chain(4), 3, vec![4, 3, 3]).unwrap();
        assert_eq!(gm.gbar(), vec![4, 3, 3, 1]);

        let gm = GMap::new(chain(3), 3, vec![3, 3, 3]).unwrap();
        assert_eq!(gm.gbar(), vec![3, 3, 3]);

        let gm = GMap::new(chain(2), 1, vec![1]).unwrap();
        assert_eq!(gm.gbar(), vec![1, 1]);
    }

    #[test]
    fn validation_rejects_each_violation() {
        // g(e) != e
        assert!(GMap::new(chain(4), 3, vec![4, 3, 4]).is_err());
        // increasing step
        assert!(GMap::new(chain(4), 3, vec![3, 4, 3]).is_err());
        // below e
        assert!(GMap::new(chain(4), 3, vec![4, 2, 3]).is_err());
        // above k
        assert!(GMap::new(chain(4), 3, vec![5, 3, 3]).is_err());
        // wrong domain size
        assert!(GMap::new(chain(4), 3, vec![4, 3]).is_err());
        // valid
        assert!(GMap::new(chain(4), 3, vec![4, 3, 3]).is_ok());
    }

    #[test]
    fn enumeration_count_is_two_to_k_minus_one() {
        for k in 1..=7 {
            let all = GMap::enumerate_all(chain(k));
            assert_eq!(all.len(), 1 << (k - 1), "k={k}");
            // no duplicates
            let mut seen = std::collections::HashSet::new();
            for gm in &all {
                assert!(seen.insert((gm.e(), gm.g_values().to_vec())));
            }
        }
    }

    #[test]
    fn display_format() {
        let gm = GMap::new(chain(4), 3, vec![4, 3, 3]).unwrap();
        assert_eq!(gm.to_string(), "e=3; g=4,3,3");
    }
}
