//! Permutations of strand positions, reduced words in adjacent
//! transpositions, and braid-move paths between reduced words.
//!
//! Conventions used throughout the KLR engine:
//! * positions are 0-based; `s_k` is the transposition of positions
//!   `k` and `k+1`, so a word letter `k` ranges over `0..n-1`;
//! * composition is `(w
//!   ∘ v)(p) = w(v(p))`, and the permutation of a word `[w_1, …, w_m]`
//!   is `s_{w_1} ∘ ⋯ ∘ s_{w_m}`, matching the product `τ_{w_1} ⋯ τ_{w_m}`
//!   in which the rightmost factor acts first;
//! * the canonical reduced word of `w` is built by repeatedly taking the
//!   smallest left descent, which makes basis elements deterministic.

use std::collections::HashMap;

/// A permutation of `{0, …, n-1}` stored in one-line notation:
/// `images[p]` is the image of `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition `s_k` on `n` points, swapping `k` and
    /// `k+1`.  Panics if `k + 1 >= n`.
    pub fn transposition(n: usize, k: usize) -> Self {
        assert!(k + 1 < n, "transposition index out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k, k + 1);
        Perm { images }
    }

    /// Builds a permutation from explicit images.  Panics unless `images`
    /// is a permutation of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            assert!(p < images.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Perm { images }
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a single position.
    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    /// One-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Composition `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Perm {
            images: (0..self.n()).map(|p| self.images[other.images[p]]).collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Perm { images }
    }

    /// Coxeter length, i.e. the number of inversions `p < q` with
    /// `w(p) > w(q)`.
    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// All inversion pairs `(p, q)` with `p < q` and `w(p) > w(q)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Acts on a sequence of strand data: the entry at source position `p`
    /// moves to target position `w(p)`.
    pub fn act_seq<T: Clone>(&self, src: &[T]) -> Vec<T> {
        assert_eq!(self.n(), src.len(), "size mismatch");
        let mut out: Vec<Option<T>> = vec![None; src.len()];
        for (p, item) in src.iter().enumerate() {
            out[self.images[p]] = Some(item.clone());
        }
        out.into_iter().map(|x| x.unwrap()).collect()
    }

    /// The smallest `k` with `ℓ(s_k w) < ℓ(w)`, i.e. with
    /// `w^{-1}(k) > w^{-1}(k+1)`; `None` for the identity.
    pub fn min_left_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (0..self.n().saturating_sub(1)).find(|&k| inv.images[k] > inv.images[k + 1])
    }

    /// The canonical reduced word, obtained by repeatedly stripping the
    /// smallest left descent.  Deterministic, hence suitable for naming
    /// basis elements.
    pub fn canonical_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(k) = w.min_left_descent() {
            word.push(k);
            w = Perm::transposition(w.n(), k).compose(&w);
        }
        word
    }

    /// Permutation of a word read as `s_{w_1} ∘ ⋯ ∘ s_{w_m}`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut w = Perm::identity(n);
        for &k in word.iter().rev() {
            w = Perm::transposition(n, k).compose(&w);
        }
        w
    }

    /// All permutations of `n` points, in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            // Next lexicographic permutation; stop after the last one.
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

/// A word is reduced exactly when its length equals the Coxeter length of
/// its permutation.
pub fn word_is_reduced(n: usize, word: &[usize]) -> bool {
    Perm::from_word(n, word).length() == word.len()
}

/// One rewrite step between reduced words of the same permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordMove {
    /// Swap the distant letters at positions `t`, `t+1`.
    Commute(usize),
    /// Replace `[a, b, a]` at positions `t..t+3` by `[b, a, b]`
    /// (`|a - b| = 1`).
    Braid(usize),
}

fn neighbors(word: &[usize]) -> Vec<(WordMove, Vec<usize>)> {
    let mut out = Vec::new();
    for t in 0..word.len().saturating_sub(1) {
        if word[t].abs_diff(word[t + 1]) >= 2 {
            let mut next = word.to_vec();
            next.swap(t, t + 1);
            out.push((WordMove::Commute(t), next));
        }
    }
    for t in 0..word.len().saturating_sub(2) {
        if word[t] == word[t + 2] && word[t].abs_diff(word[t + 1]) == 1 {
            let mut next = word.to_vec();
            next[t] = word[t + 1];
            next[t + 1] = word[t];
            next[t + 2] = word[t + 1];
            out.push((WordMove::Braid(t), next));
        }
    }
    out
}

/// A shortest chain of commutation and braid moves from `start` to `goal`,
/// both reduced words of the same permutation.  Returns the moves together
/// with every intermediate word: `words[t]` is the word before `moves[t]`.
///
/// Existence is Matsumoto's theorem; the search is a plain BFS over
/// reduced words, which stays tiny at the strand counts used here.
pub fn word_path(start: &[usize], goal: &[usize]) -> (Vec<Vec<usize>>, Vec<WordMove>) {
    if start == goal {
        return (vec![start.to_vec()], Vec::new());
    }
    let mut parent: HashMap<Vec<usize>, (Vec<usize>, WordMove)> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start.to_vec());
    parent.insert(start.to_vec(), (Vec::new(), WordMove::Commute(usize::MAX)));
    while let Some(word) = queue.pop_front() {
        for (mv, next) in neighbors(&word) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), (word.clone(), mv));
            if next == goal {
                // Walk parents back to the start.
                let mut words = vec![next];
                let mut moves = Vec::new();
                loop {
                    let (prev, mv) = parent[words.last().unwrap()].clone();
                    moves.push(mv);
                    if prev == start {
                        words.push(prev);
                        break;
                    }
                    words.push(prev);
                }
                words.reverse();
                moves.reverse();
                return (words, moves);
            }
            queue.push_back(next);
        }
    }
    unreachable!("reduced words of one permutation are connected by moves");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let s0 = Perm::transposition(3, 0);
        let s1 = Perm::transposition(3, 1);
        let w = s1.compose(&s0);
        assert_eq!(w.images(), &[2, 0, 1]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn act_seq_moves_source_to_target() {
        let s0 = Perm::transposition(3, 0);
        assert_eq!(s0.act_seq(&['a', 'b', 'c']), vec!['b', 'a', 'c']);
        let w = Perm::from_images(vec![2, 0, 1]);
        // Source entry p lands at position w(p).
        assert_eq!(w.act_seq(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
    }

    #[test]
    fn canonical_word_round_trips() {
        for w in Perm::all(4) {
            let word = w.canonical_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(4, &word), w);
        }
    }

    #[test]
    fn canonical_word_is_greedy_smallest() {
        let w0 = Perm::from_images(vec![2, 1, 0]);
        assert_eq!(w0.canonical_word(), vec![0, 1, 0]);
    }

    #[test]
    fn word_reduced_detection() {
        assert!(word_is_reduced(3, &[0, 1, 0]));
        assert!(!word_is_reduced(3, &[0, 0]));
        assert!(!word_is_reduced(3, &[0, 1, 0, 1]));
    }

    #[test]
    fn path_connects_reduced_words() {
        // The two reduced words of the longest element of S_3.
        let (words, moves) = word_path(&[1, 0, 1], &[0, 1, 0]);
        assert_eq!(moves, vec![WordMove::Braid(0)]);
        assert_eq!(words.len(), 2);

        // A longer example in S_4: both are reduced words of w_0.
        let start = vec![2, 1, 2, 0, 1, 2];
        let goal = Perm::from_word(4, &start).canonical_word();
        let (words, moves) = word_path(&start, &goal);
        assert_eq!(words.len(), moves.len() + 1);
        for (t, mv) in moves.iter().enumerate() {
            // Each step is a legal rewrite of the previous word.
            let found = neighbors(&words[t])
                .into_iter()
                .any(|(m, next)| m == *mv && next == words[t + 1]);
            assert!(found);
        }
        assert_eq!(words.last().unwrap(), &goal);
    }

    #[test]
    fn all_perms_count_and_order() {
        let perms = Perm::all(4);
        assert_eq!(perms.len(), 24);
        assert!(perms[0].is_identity());
        assert_eq!(perms[23].images(), &[3, 2, 1, 0]);
    }
}
