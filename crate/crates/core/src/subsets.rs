//! Colexicographic enumeration of fixed-size index subsets.

/// Walks the `k`-subsets of `0..n` in colexicographic order (ordered by largest
/// element, then next largest, ...). Yields borrowed slices, so it is a lending
/// cursor rather than an [`Iterator`].
#[derive(Debug, Clone)]
pub struct Colex {
    n: usize,
    c: Vec<usize>,
    started: bool,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            c: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Advances to the next subset.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.c);
        }
        let k = self.c.len();
        let mut j = 0;
        while j < k {
            let cap = if j + 1 < k { self.c[j + 1] } else { self.n };
            if self.c[j] + 1 < cap {
                break;
            }
            j += 1;
        }
        if j == k {
            self.done = true;
            return None;
        }
        self.c[j] += 1;
        for (i, slot) in self.c[..j].iter_mut().enumerate() {
            *slot = i;
        }
        Some(&self.c)
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
