/// Minimal splitmix64 generator.
///
/// All randomized corpora in this crate must be byte-reproducible from a seed
/// across platforms and releases, so we pin the generator ourselves instead of
/// depending on an external crate whose stream may change between versions.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        // Desk-scale bounds; modulo bias is negligible and reproducibility is
        // what matters here.
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % den as u64) < num as u64
    }

    /// Choose `k` distinct elements of `items`, preserving their relative order.
    pub fn choose_subset<T: Clone>(&mut self, items: &[T], k: usize) -> Vec<T> {
        assert!(k <= items.len());
        let mut picked: Vec<usize> = (0..items.len()).collect();
        // Partial Fisher-Yates over indices.
        for i in 0..k {
            let j = self.range(i, items.len() - 1);
            picked.swap(i, j);
        }
        let mut idx: Vec<usize> = picked[..k].to_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| items[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_stable() {
        let mut rng = Rng::new(7);
        let first: Vec<u64> = (0..4).map(|_| rng.next_u64()).collect();
        let mut rng2 = Rng::new(7);
        let second: Vec<u64> = (0..4).map(|_| rng2.next_u64()).collect();
        assert_eq!(first, second);
        // Frozen prefix: if these values ever change, seeded reports change too.
        assert_eq!(first[0], 7191089600892374487);
    }

    #[test]
    fn subset_has_requested_size() {
        let mut rng = Rng::new(3);
        let items: Vec<usize> = (0..10).collect();
        for k in 0..=10 {
            let s = rng.choose_subset(&items, k);
            assert_eq!(s.len(), k);
            let mut t = s.clone();
            t.dedup();
            assert_eq!(t.len(), k);
        }
    }
}
