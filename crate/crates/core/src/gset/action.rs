use crate::group::FiniteGroup;

use super::GSet;

/// Abstract finite left G-set: enough structure to run orbit scans without a
/// materialized action table. Powers like `S^4` get large; this keeps them
/// implicit.
pub trait GAction {
    fn group(&self) -> &FiniteGroup;
    fn size(&self) -> usize;
    fn act(&self, g: usize, x: usize) -> usize;
}

impl GAction for GSet {
    fn group(&self) -> &FiniteGroup {
        self.group()
    }

    fn size(&self) -> usize {
        self.size()
    }

    #[inline]
    fn act(&self, g: usize, x: usize) -> usize {
        self.apply(g, x)
    }
}

/// Product of G-sets with the diagonal action; index is lexicographic with
/// the first factor most significant.
pub struct ProductAction<'a> {
    factors: Vec<&'a GSet>,
    size: usize,
}

impl<'a> ProductAction<'a> {
    pub fn new(factors: Vec<&'a GSet>) -> Self {
        assert!(!factors.is_empty());
        let size = factors.iter().map(|f| f.size()).product();
        ProductAction { factors, size }
    }

    pub fn unpack(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let s = self.factors[i].size();
            out[i] = x % s;
            x /= s;
        }
        out
    }

    pub fn pack(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.size() + c)
    }
}

impl GAction for ProductAction<'_> {
    fn group(&self) -> &FiniteGroup {
        self.factors[0].group()
    }

    fn size(&self) -> usize {
        self.size
    }

    fn act(&self, g: usize, x: usize) -> usize {
        let mut rem = x;
        let mut acc = 0;
        // Peel digits most-significant first to avoid the alloc in unpack.
        let mut divisors = self.size;
        for f in &self.factors {
            divisors /= f.size();
            let digit = rem / divisors;
            rem %= divisors;
            acc = acc * f.size() + f.apply(g, digit);
        }
        acc
    }
}

/// `S^n` with the diagonal action; `n = 0` is the one-point set.
pub struct PowerAction<'a> {
    base: &'a GSet,
    n: usize,
    size: usize,
}

impl<'a> PowerAction<'a> {
    pub fn new(base: &'a GSet, n: usize) -> Self {
        let size = base.size().checked_pow(n as u32).expect("power overflows");
        PowerAction { base, n, size }
    }

    pub fn unpack(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for i in (0..self.n).rev() {
            out[i] = x % self.base.size();
            x /= self.base.size();
        }
        out
    }

    pub fn pack(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * self.base.size() + c)
    }

    /// Index in `S^{n-1}` obtained by deleting coordinate `i` (0-based).
    pub fn delete_coordinate(&self, x: usize, i: usize) -> usize {
        let s = self.base.size();
        let mut digits = self.unpack(x);
        digits.remove(i);
        digits.iter().fold(0, |acc, &c| acc * s + c)
    }
}

impl GAction for PowerAction<'_> {
    fn group(&self) -> &FiniteGroup {
        self.base.group()
    }

    fn size(&self) -> usize {
        self.size
    }

    fn act(&self, g: usize, x: usize) -> usize {
        if self.n == 0 {
            return 0;
        }
        let s = self.base.size();
        let mut rem = x;
        let mut acc = 0;
        let mut div = self.size / s;
        loop {
            let digit = rem / div;
            rem %= div;
            acc = acc * s + self.base.apply(g, digit);
            if div == 1 {
                break;
            }
            div /= s;
        }
        acc
    }
}

/// Disjoint union of G-sets; blocks are concatenated in order.
pub struct DisjointUnionAction<'a> {
    parts: Vec<&'a GSet>,
    offsets: Vec<usize>,
    size: usize,
}

impl<'a> DisjointUnionAction<'a> {
    pub fn new(parts: Vec<&'a GSet>) -> Self {
        assert!(!parts.is_empty());
        let mut offsets = Vec::with_capacity(parts.len());
        let mut size = 0;
        for p in &parts {
            offsets.push(size);
            size += p.size();
        }
        DisjointUnionAction { parts, offsets, size }
    }
}

impl GAction for DisjointUnionAction<'_> {
    fn group(&self) -> &FiniteGroup {
        self.parts[0].group()
    }

    fn size(&self) -> usize {
        self.size
    }

    fn act(&self, g: usize, x: usize) -> usize {
        let block = match self.offsets.binary_search(&x) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        self.offsets[block] + self.parts[block].apply(g, x - self.offsets[block])
    }
}

/// Materializes any abstract action as a dense `GSet`.
pub fn materialize(action: &dyn GAction) -> GSet {
    GSet::new(action.group(), action.size(), |g, x| action.act(g, x))
}
