use std::fmt;

use smallvec::SmallVec;

use super::Color;

/// A set of colors from the palette `1..=k`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorSet {
    words: SmallVec<[u64; 2]>,
}

impl ColorSet {
    pub fn empty() -> ColorSet {
        ColorSet::default()
    }

    /// `{1, ..., k}`.
    pub fn palette(k: Color) -> ColorSet {
        let mut s = ColorSet::empty();
        for c in 1..=k {
            s.insert(c);
        }
        s
    }

    /// Builds a set from a bit mask where bit `c` stands for color `c`.
    pub fn from_mask(mask: u64) -> ColorSet {
        let mut s = ColorSet::empty();
        s.words.push(mask & !1);
        s.trim();
        s
    }

    pub fn insert(&mut self, c: Color) {
        let (w, b) = (c as usize / 64, c as usize % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, c: Color) {
        let (w, b) = (c as usize / 64, c as usize % 64);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
        }
        self.trim();
    }

    pub fn contains(&self, c: Color) -> bool {
        let (w, b) = (c as usize / 64, c as usize % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest color in the set.
    pub fn first(&self) -> Option<Color> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(i as Color * 64 + b as Color)
            })
        })
    }

    pub fn is_disjoint(&self, other: &ColorSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        let mut s = ColorSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        let len = self.words.len().max(other.words.len());
        let get = |v: &SmallVec<[u64; 2]>, i: usize| v.get(i).copied().unwrap_or(0);
        ColorSet {
            words: (0..len).map(|i| get(&self.words, i) | get(&other.words, i)).collect(),
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
