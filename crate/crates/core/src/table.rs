use crate::chain::FiniteChain;
use crate::error::{Error, Result};

/// Dense tables are capped at this many cells; enough for every documented
/// scale (k <= 8, n <= 4) with plenty of headroom.
pub const MAX_TABLE_CELLS: usize = 1 << 24;

/// Lexicographic index of an argument tuple, first coordinate most
/// significant: `code = sum_i (x_i - 1) * k^(n-i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleCode(pub usize);

/// Number of cells of an `n`-ary table on `L_k`, or an error when the dense
/// representation would not fit.
pub fn table_size(chain: FiniteChain, n: usize) -> Result<usize> {
    let mut size: usize = 1;
    for _ in 0..n {
        size = size
            .checked_mul(chain.k() as usize)
            .filter(|&s| s <= MAX_TABLE_CELLS)
            .ok_or(Error::ResourceGuard {
                what: format!("dense {n}-ary table on {chain}"),
                estimate: (chain.k() as u128).pow(n as u32),
                guard: MAX_TABLE_CELLS as u64,
            })?;
    }
    Ok(size)
}

/// Lexicographic index of `tuple` among all `n`-tuples over the chain.
pub fn encode_tuple(chain: FiniteChain, n: usize, tuple: &[u32]) -> Result<TupleCode> {
    if tuple.len() != n {
        return Err(Error::ArityMismatch {
            got: tuple.len(),
            expected: n,
        });
    }
    chain.check_tuple(tuple)?;
    let k = chain.k() as usize;
    let mut code = 0usize;
    for &x in tuple {
        code = code * k + (x as usize - 1);
    }
    Ok(TupleCode(code))
}

/// Inverse of [`encode_tuple`].
pub fn decode_tuple(chain: FiniteChain, n: usize, code: TupleCode) -> Result<Vec<u32>> {
    let size = table_size(chain, n)?;
    if code.0 >= size {
        return Err(Error::CodeOutOfRange { code: code.0, size });
    }
    let k = chain.k() as usize;
    let mut tuple = vec![0u32; n];
    let mut rest = code.0;
    for slot in tuple.iter_mut().rev() {
        *slot = (rest % k) as u32 + 1;
        rest /= k;
    }
    Ok(tuple)
}

/// A total `n`-ary operation `F: L_k^n -> L_k`, stored densely in
/// [`TupleCode`] order. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    chain: FiniteChain,
    arity: usize,
    values: Vec<u32>,
}

impl OpTable {
    pub fn new(chain: FiniteChain, arity: usize, values: Vec<u32>) -> Result<Self> {
        let size = table_size(chain, arity)?;
        if values.len() != size {
            return Err(Error::WrongTableSize {
                got: values.len(),
                expected: size,
            });
        }
        chain.check_tuple(&values)?;
        Ok(OpTable {
            chain,
            arity,
            values,
        })
    }

    /// Builds the table by evaluating `f` on every decoded tuple.
    pub fn from_fn(chain: FiniteChain, arity: usize, mut f: impl FnMut(&[u32]) -> u32) -> Result<Self> {
        let size = table_size(chain, arity)?;
        let mut values = Vec::with_capacity(size);
        let mut tuple = vec![1u32; arity];
        for _ in 0..size {
            values.push(f(&tuple));
            advance_tuple(&mut tuple, chain.k());
        }
        OpTable::new(chain, arity, values)
    }

    pub fn chain(&self) -> FiniteChain {
        self.chain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `F(tuple)`, validating arity and range.
    pub fn eval(&self, tuple: &[u32]) -> Result<u32> {
        let code = encode_tuple(self.chain, self.arity, tuple)?;
        Ok(self.values[code.0])
    }

    /// `F` at an already-validated code.
    pub fn eval_code(&self, code: TupleCode) -> u32 {
        self.values[code.0]
    }

    /// Iterates `(code, tuple, value)` in code order.
    pub fn cells(&self) -> Cells<'_> {
        Cells {
            table: self,
            next: 0,
            tuple: vec![1; self.arity],
        }
    }
}

/// Advances `tuple` to its lexicographic successor over `1..=k`, wrapping at
/// the last tuple.
pub fn advance_tuple(tuple: &mut [u32], k: u32) {
    for slot in tuple.iter_mut().rev() {
        if *slot < k {
            *slot += 1;
            return;
        }
        *slot = 1;
    }
}

/// Iterator over all `n`-tuples of `1..=k` in [`TupleCode`] order.
pub fn all_tuples(chain: FiniteChain, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let size = table_size(chain, n).expect("tuple space exceeds dense cap");
    let k = chain.k();
    let mut tuple = vec![1u32; n];
    (0..size).map(move |_| {
        let out = tuple.clone();
        advance_tuple(&mut tuple, k);
        out
    })
}

pub struct Cells<'a> {
    table: &'a OpTable,
    next: usize,
    tuple: Vec<u32>,
}

impl<'a> Iterator for Cells<'a> {
    type Item = (TupleCode, Vec<u32>, u32);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.table.len() {
            return None;
        }
        let code = TupleCode(self.next);
        let item = (code, self.tuple.clone(), self.table.values[self.next]);
        advance_tuple(&mut self.tuple, self.table.chain.k());
        self.next += 1;
        Some(item)
    }
}
