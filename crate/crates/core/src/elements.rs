use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// A subset of a group's elements as a membership bitmask with cached cardinality.
#[derive(Clone, Debug)]
pub struct ElementSet {
    words: Vec<u64>,
    width: usize,
    size: usize,
}

impl ElementSet {
    pub fn empty(width: usize) -> Self {
        ElementSet {
            words: vec![0; width.div_ceil(64)],
            width,
            size: 0,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = ElementSet::empty(width);
        for x in 0..width {
            set.insert(x);
        }
        set
    }

    pub fn from_elements(width: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut set = ElementSet::empty(width);
        for x in elements {
            set.insert(x);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_full(&self) -> bool {
        self.size == self.width
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.width && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns `true` if `x` was not already present.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.width, "element {x} outside width {}", self.width);
        let (w, bit) = (x / 64, 1u64 << (x % 64));
        if self.words[w] & bit != 0 {
            return false;
        }
        self.words[w] |= bit;
        self.size += 1;
        true
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.size = count(&self.words);
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.width, other.width);
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let size = count(&words);
        ElementSet {
            words,
            width: self.width,
            size,
        }
    }

    pub fn intersection_len(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∪ other|` without allocating.
    pub fn union_len(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.size <= other.size && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.words == other.words
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.width.hash(state);
        self.words.hash(state);
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.width.cmp(&other.width))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
