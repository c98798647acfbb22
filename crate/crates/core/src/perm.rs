//! Permutations of {1, ..., n}, Young subgroups, and distinguished coset
//! representatives.
//!
//! Products compose left to right: `(u.compose(&v))(j) = v(u(j))`, so a
//! generator word [i1, ..., il] multiplies out as s_{i1} applied first.
//! Positions and values are 1-based in the public interface.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    /// images[j] = w(j+1) - 1.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based one-line notation [w(1), ..., w(n)].
    pub fn from_one_line(line: &[usize]) -> Permutation {
        let n = line.len();
        let mut seen = vec![false; n];
        let images: Vec<usize> = line
            .iter()
            .map(|&v| {
                assert!((1..=n).contains(&v), "value {} out of range 1..={}", v, n);
                v - 1
            })
            .collect();
        for &v in &images {
            assert!(!seen[v], "repeated value {} in one-line notation", v + 1);
            seen[v] = true;
        }
        Permutation { images }
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// The adjacent transposition s_i = (i, i+1), for 1 <= i < n.
    pub fn transposition(n: usize, i: usize) -> Permutation {
        assert!((1..n).contains(&i), "generator index {} out of range", i);
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// w(j), 1-based.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    /// First self, then other.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (j, &v) in self.images.iter().enumerate() {
            images[v] = j;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether right multiplication by s_i shortens the word, i.e.
    /// l(w s_i) < l(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// The lexicographically least reduced word, as 1-based generator
    /// indices multiplying left to right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.length());
        loop {
            // A reduced word can start with s_i exactly when the one-line
            // word descends at i; take the smallest such i.
            let descent = (0..w.images.len().saturating_sub(1))
                .find(|&i| w.images[i] > w.images[i + 1]);
            match descent {
                None => break,
                Some(i) => {
                    word.push(i + 1);
                    w.images.swap(i, i + 1);
                }
            }
        }
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.compose(&Permutation::transposition(n, i));
        }
        w
    }

    /// All of S_n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            // Next lexicographic arrangement.
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Young subgroup of S_n stabilising the consecutive blocks cut out by
/// a flat list of part sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    n: usize,
    /// 0-based block index of each 0-based position.
    block_of: Vec<usize>,
}

impl YoungSubgroup {
    /// Parts are taken in order and must sum to n; zero parts are allowed
    /// and ignored.
    pub fn from_parts(n: usize, parts: &[usize]) -> YoungSubgroup {
        let total: usize = parts.iter().sum();
        assert_eq!(total, n, "parts sum {} but degree is {}", total, n);
        let mut block_of = Vec::with_capacity(n);
        let mut b = 0;
        for &p in parts {
            if p == 0 {
                continue;
            }
            for _ in 0..p {
                block_of.push(b);
            }
            b += 1;
        }
        YoungSubgroup { n, block_of }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        assert_eq!(w.degree(), self.n);
        (1..=self.n).all(|j| self.block_of[j - 1] == self.block_of[w.apply(j) - 1])
    }

    pub fn order(&self) -> usize {
        let mut sizes = std::collections::BTreeMap::new();
        for &b in &self.block_of {
            *sizes.entry(b).or_insert(0usize) += 1;
        }
        sizes.values().map(|&s| (1..=s).product::<usize>()).product()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        Permutation::all(self.n)
            .into_iter()
            .filter(|w| self.contains(w))
            .collect()
    }

    /// Minimal-length right coset representatives, in one-line
    /// lexicographic order; these are exactly the permutations increasing
    /// along each block of positions, matching the row-standard tableau
    /// bijection reading word by word.
    pub fn coset_reps(&self) -> Vec<Permutation> {
        Permutation::all(self.n)
            .into_iter()
            .filter(|d| self.is_distinguished(d))
            .collect()
    }

    pub fn is_distinguished(&self, d: &Permutation) -> bool {
        assert_eq!(d.degree(), self.n);
        (1..self.n).all(|j| {
            self.block_of[j - 1] != self.block_of[j] || d.apply(j) < d.apply(j + 1)
        })
    }
}

/// Minimal-length representatives of the double cosets S_lam \ S_n / S_mu,
/// in one-line lexicographic order.
pub fn double_coset_reps(lam: &YoungSubgroup, mu: &YoungSubgroup) -> Vec<Permutation> {
    assert_eq!(lam.degree(), mu.degree());
    Permutation::all(lam.degree())
        .into_iter()
        .filter(|d| lam.is_distinguished(d) && mu.is_distinguished(&d.inverse()))
        .collect()
}

/// The unique minimal-length element of S_lam w S_mu.
pub fn min_double_coset_rep(
    w: &Permutation,
    lam: &YoungSubgroup,
    mu: &YoungSubgroup,
) -> Permutation {
    let mut best: Option<Permutation> = None;
    for l in lam.elements() {
        let lw = l.compose(w);
        for r in mu.elements() {
            let cand = lw.compose(&r);
            match &best {
                Some(b) if cand.length() >= b.length() => {}
                _ => best = Some(cand),
            }
        }
    }
    best.expect("double coset is never empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_left_factor_first() {
        let s1 = Permutation::transposition(3, 1);
        let s2 = Permutation::transposition(3, 2);
        let w = s2.compose(&s1);
        assert_eq!(w.one_line(), vec![2, 3, 1]);
        assert_eq!(w.apply(1), 2);
        assert_eq!(Permutation::from_word(3, &[2, 1]), w);
    }

    #[test]
    fn lengths_and_inverses() {
        for w in Permutation::all(4) {
            assert_eq!(w.length(), w.inverse().length());
            assert!(w.compose(&w.inverse()).is_identity());
            assert_eq!(w.length(), w.reduced_word().len());
            assert_eq!(Permutation::from_word(4, &w.reduced_word()), w);
        }
    }

    #[test]
    fn longest_element_word_is_lex_least() {
        let w0 = Permutation::from_one_line(&[3, 2, 1]);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
        let w0 = Permutation::from_one_line(&[4, 3, 2, 1]);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1, 3, 2, 1]);
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn reduced_word_is_minimal_lexicographically() {
        // Brute force: no reduced word of the same length is lex smaller.
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            let l = word.len();
            let mut stack = vec![(Permutation::identity(4), Vec::<usize>::new())];
            while let Some((p, partial)) = stack.pop() {
                if partial.len() == l {
                    if p == w {
                        assert!(word <= partial, "{:?} beats {:?} for {}", partial, word, w);
                    }
                    continue;
                }
                for i in 1..4 {
                    let mut next = partial.clone();
                    next.push(i);
                    stack.push((p.compose(&Permutation::transposition(4, i)), next));
                }
            }
        }
    }

    #[test]
    fn coset_reps_for_two_one() {
        let mu = YoungSubgroup::from_parts(3, &[2, 1]);
        let reps = mu.coset_reps();
        let lines: Vec<Vec<usize>> = reps.iter().map(Permutation::one_line).collect();
        assert_eq!(lines, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1]]);
        assert_eq!(reps.iter().map(Permutation::length).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn coset_reps_are_distinguished() {
        // Oracle: each representative is the unique shortest element of its
        // coset and lengths add.
        for parts in [vec![2, 2], vec![3, 1], vec![1, 1, 2], vec![2, 1, 1]] {
            let mu = YoungSubgroup::from_parts(4, &parts);
            let reps = mu.coset_reps();
            assert_eq!(reps.len(), 24 / mu.order());
            for d in &reps {
                for w in mu.elements() {
                    let wd = w.compose(d);
                    assert_eq!(wd.length(), w.length() + d.length());
                }
            }
            // Cosets partition the group.
            let mut seen = std::collections::BTreeSet::new();
            for d in &reps {
                for w in mu.elements() {
                    assert!(seen.insert(w.compose(d).one_line()));
                }
            }
            assert_eq!(seen.len(), 24);
        }
    }

    #[test]
    fn double_coset_reps_are_minimal_and_unique() {
        let lam = YoungSubgroup::from_parts(4, &[2, 2]);
        let mu = YoungSubgroup::from_parts(4, &[3, 1]);
        let reps = double_coset_reps(&lam, &mu);
        // Every group element lies in exactly one double coset.
        let mut total = 0;
        for d in &reps {
            let mut coset = std::collections::BTreeSet::new();
            for l in lam.elements() {
                for r in mu.elements() {
                    coset.insert(l.compose(d).compose(&r));
                }
            }
            assert!(coset.iter().all(|w| w.length() >= d.length()));
            assert_eq!(
                coset.iter().filter(|w| w.length() == d.length()).count(),
                1,
                "minimal element must be unique"
            );
            assert_eq!(&min_double_coset_rep(d, &lam, &mu), d);
            total += coset.len();
        }
        assert_eq!(total, 24);
    }
}
