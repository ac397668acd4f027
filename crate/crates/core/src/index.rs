//! Multi-index combinatorics over `{1..n}`.
//!
//! Three families of words of length `m` are used throughout:
//!
//! * [`Placement`]: arbitrary words, repetition allowed (`n^m` of them);
//!   these index tensor components.
//! * [`Injection`]: repetition-free words (`n!/(n-m)!`); the summation
//!   domain of Leibniz sums.
//! * [`Combination`]: strictly increasing words (`C(n, m)`); these index
//!   basis multivectors and compound-matrix rows and columns.
//!
//! Letters are 1-based, ranks are 0-based, and every enumeration is in
//! lexicographic order on words.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{domain_err, Error, Result};
use crate::scalar::Scalar;

/// A parity, `(-1)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_count(k: u64) -> Self {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    /// Multiplies `x` by this sign.
    pub fn apply<T: Neg<Output = T>>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Panics if the result overflows `usize`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n - k + i) is divisible by i at every step.
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

/// `n!/(n-m)!`, zero when `m > n`.
pub fn falling_factorial(n: usize, m: usize) -> usize {
    if m > n {
        return 0;
    }
    (n - m + 1..=n).product()
}

/// Number of pairs `i < j` with `xs[i] > xs[j]`, counted by merge sort.
pub fn count_inversions<T: Ord + Clone>(xs: &[T]) -> u64 {
    fn sort<T: Ord + Clone>(xs: &mut [T], buf: &mut Vec<T>) -> u64 {
        let len = xs.len();
        if len < 2 {
            return 0;
        }
        let mid = len / 2;
        let mut count = sort(&mut xs[..mid], buf) + sort(&mut xs[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < len {
            if xs[j] < xs[i] {
                // xs[j] jumps over everything left in the first half.
                count += (mid - i) as u64;
                buf.push(xs[j].clone());
                j += 1;
            } else {
                buf.push(xs[i].clone());
                i += 1;
            }
        }
        buf.extend_from_slice(&xs[i..mid]);
        buf.extend_from_slice(&xs[j..len]);
        xs.clone_from_slice(buf);
        count
    }
    let mut work = xs.to_vec();
    let mut buf = Vec::with_capacity(xs.len());
    sort(&mut work, &mut buf)
}

fn check_letters(n: usize, word: &[usize]) -> Result<()> {
    match word.iter().find(|&&x| x == 0 || x > n) {
        Some(&x) => domain_err(format!("letter {x} outside 1..={n}")),
        None => Ok(()),
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[usize]) -> fmt::Result {
    for (k, x) in word.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses a comma-separated list of 1-based letters such as `"1,3,4"`.
/// The empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid index word {s:?}")))
        })
        .collect()
}

macro_rules! word_common {
    ($ty:ident) => {
        impl $ty {
            pub fn dim(&self) -> usize {
                self.n
            }

            pub fn word(&self) -> &[usize] {
                &self.word
            }

            pub fn len(&self) -> usize {
                self.word.len()
            }

            pub fn is_empty(&self) -> bool {
                self.word.is_empty()
            }

            pub fn into_word(self) -> Vec<usize> {
                self.word
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_word(f, &self.word)
            }
        }
    };
}

/// An arbitrary word over `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    word: Vec<usize>,
    n: usize,
}

word_common!(Placement);

impl Placement {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        check_letters(n, &word)?;
        Ok(Placement { word, n })
    }

    /// Position in the lexicographic enumeration of all `n^m` placements.
    pub fn rank(&self) -> usize {
        self.word.iter().fold(0, |acc, &x| acc * self.n + (x - 1))
    }

    pub fn unrank(n: usize, m: usize, mut r: usize) -> Result<Self> {
        let bound = n.checked_pow(m as u32).expect("n^m overflows usize");
        if r >= bound {
            return Err(Error::Range { index: r, bound });
        }
        let mut word = vec![0; m];
        for slot in word.iter_mut().rev() {
            *slot = r % n + 1;
            r /= n;
        }
        Ok(Placement { word, n })
    }

    pub fn has_repeats(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        self.word.iter().any(|&x| std::mem::replace(&mut seen[x], true))
    }

    /// The word `k -> self[p(k)]`.
    pub fn permuted(&self, p: &Permutation) -> Placement {
        assert_eq!(p.degree(), self.len(), "permutation degree mismatch");
        let word = p.images().iter().map(|&i| self.word[i - 1]).collect();
        Placement { word, n: self.n }
    }

    pub fn swapped(&self, i: usize, j: usize) -> Placement {
        let mut word = self.word.clone();
        word.swap(i, j);
        Placement { word, n: self.n }
    }

    pub fn concat(&self, other: &Placement) -> Placement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Placement { word, n: self.n }
    }

    pub fn as_combination(&self) -> Option<Combination> {
        self.word
            .windows(2)
            .all(|w| w[0] < w[1])
            .then(|| Combination { word: self.word.clone(), n: self.n })
    }
}

/// A repetition-free word over `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection {
    word: Vec<usize>,
    n: usize,
}

word_common!(Injection);

impl Injection {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        check_letters(n, &word)?;
        let mut seen = vec![false; n + 1];
        if let Some(&x) = word.iter().find(|&&x| std::mem::replace(&mut seen[x], true)) {
            return domain_err(format!("letter {x} repeated in injection"));
        }
        Ok(Injection { word, n })
    }

    /// Splits the word into its sorted letter set and the permutation `p`
    /// with `word[k] = sorted[p(k)]`.
    pub fn decompose(&self) -> (Combination, Permutation) {
        let mut sorted = self.word.clone();
        sorted.sort_unstable();
        let images = self
            .word
            .iter()
            .map(|x| sorted.binary_search(x).expect("letter present") + 1)
            .collect();
        (
            Combination { word: sorted, n: self.n },
            Permutation { images },
        )
    }

    /// Inverse of [`Injection::decompose`].
    pub fn recompose(c: &Combination, p: &Permutation) -> Result<Self> {
        if c.len() != p.degree() {
            return domain_err(format!(
                "permutation of degree {} cannot reorder {} letters",
                p.degree(),
                c.len()
            ));
        }
        let word = p.images().iter().map(|&i| c.word[i - 1]).collect();
        Ok(Injection { word, n: c.n })
    }

    /// Parity of the reordering that sorts the word.
    pub fn parity(&self) -> Sign {
        Sign::from_count(count_inversions(&self.word))
    }

    pub fn to_placement(&self) -> Placement {
        Placement { word: self.word.clone(), n: self.n }
    }
}

/// A strictly increasing word over `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination {
    word: Vec<usize>,
    n: usize,
}

word_common!(Combination);

impl Combination {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        check_letters(n, &word)?;
        if word.windows(2).any(|w| w[0] >= w[1]) {
            return domain_err(format!("word {word:?} is not strictly increasing"));
        }
        Ok(Combination { word, n })
    }

    pub fn empty(n: usize) -> Self {
        Combination { word: Vec::new(), n }
    }

    /// `(1, 2, .., m)`.
    pub fn initial(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return domain_err(format!("cannot choose {m} of {n}"));
        }
        Ok(Combination { word: (1..=m).collect(), n })
    }

    pub fn full(n: usize) -> Self {
        Combination { word: (1..=n).collect(), n }
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Combination::new(n, parse_word(s)?)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position(x).is_some()
    }

    /// 0-based position of letter `x`.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.word.binary_search(&x).ok()
    }

    /// Sum of the letters (1-based), used for Laplace signs.
    pub fn letter_sum(&self) -> usize {
        self.word.iter().sum()
    }

    pub fn without(&self, x: usize) -> Combination {
        let word = self.word.iter().copied().filter(|&y| y != x).collect();
        Combination { word, n: self.n }
    }

    pub fn is_disjoint(&self, other: &Combination) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.word[i].cmp(&other.word[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Sorted complement in `{1..n}`.
    pub fn complement(&self) -> Combination {
        let word = (1..=self.n).filter(|x| !self.contains(*x)).collect();
        Combination { word, n: self.n }
    }

    /// Position in [`enum_combinations`] order.
    pub fn rank(&self) -> usize {
        let m = self.len();
        let mut rank = 0;
        let mut prev = 0;
        for (i, &c) in self.word.iter().enumerate() {
            for v in prev + 1..c {
                rank += binomial(self.n - v, m - i - 1);
            }
            prev = c;
        }
        rank
    }

    pub fn unrank(n: usize, m: usize, mut r: usize) -> Result<Self> {
        let bound = binomial(n, m);
        if m > n || r >= bound {
            return Err(Error::Range { index: r, bound });
        }
        let mut word = Vec::with_capacity(m);
        let mut v = 1;
        for i in 0..m {
            loop {
                let below = binomial(n - v, m - i - 1);
                if r < below {
                    break;
                }
                r -= below;
                v += 1;
            }
            word.push(v);
            v += 1;
        }
        Ok(Combination { word, n })
    }

    /// Sorted union of two disjoint combinations together with the sign
    /// of the shuffle that sorts `(self, other)`.
    pub fn merge(&self, other: &Combination) -> Result<(Sign, Combination)> {
        if self.n != other.n {
            return Err(Error::Dimension(format!(
                "combinations over {} and {} letters",
                self.n, other.n
            )));
        }
        let mut word = Vec::with_capacity(self.len() + other.len());
        let mut inversions = 0u64;
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = j == other.len() || (i < self.len() && self.word[i] < other.word[j]);
            if take_left {
                word.push(self.word[i]);
                i += 1;
            } else {
                if i < self.len() && self.word[i] == other.word[j] {
                    return domain_err(format!("letter {} shared by {self} and {other}", other.word[j]));
                }
                // other[j] is smaller than every remaining letter of self.
                inversions += (self.len() - i) as u64;
                word.push(other.word[j]);
                j += 1;
            }
        }
        Ok((Sign::from_count(inversions), Combination { word, n: self.n }))
    }

    pub fn to_placement(&self) -> Placement {
        Placement { word: self.word.clone(), n: self.n }
    }
}

/// `(-1)^#{(i, j) in a x b : i > j}` for disjoint `a`, `b`.
pub fn split_sign(a: &Combination, b: &Combination) -> Result<Sign> {
    a.merge(b).map(|(s, _)| s)
}

pub fn complement(c: &Combination) -> Combination {
    c.complement()
}

/// A bijection of `{1..m}` stored as its image word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        Injection::new(images.len(), images).map(|j| Permutation { images: j.word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self ∘ other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation { images: other.images.iter().map(|&k| self.apply(k)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> u64 {
        count_inversions(&self.images)
    }

    pub fn parity(&self) -> Sign {
        Sign::from_count(self.inversions())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.images)
    }
}

/// Lexicographic stream of the `C(n, m)` combinations.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Combination;

    fn next(&mut self) -> Option<Combination> {
        let current = self.next.take()?;
        let m = current.len();
        let mut succ = current.clone();
        // Rightmost slot below its ceiling n - m + i + 1.
        if let Some(i) = (0..m).rev().find(|&i| succ[i] < self.n - m + i + 1) {
            succ[i] += 1;
            for j in i + 1..m {
                succ[j] = succ[j - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(Combination { word: current, n: self.n })
    }
}

pub fn enum_combinations(n: usize, m: usize) -> Result<Combinations> {
    if m > n {
        return domain_err(format!("cannot choose {m} of {n}"));
    }
    Ok(Combinations { n, next: Some((1..=m).collect()) })
}

/// Lexicographic stream of the `n!/(n-m)!` injections.
#[derive(Clone, Debug)]
pub struct Injections {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Injections {
    type Item = Injection;

    fn next(&mut self) -> Option<Injection> {
        let current = self.next.take()?;
        let n = self.n;
        let m = current.len();
        let mut used = vec![false; n + 1];
        for &x in &current {
            used[x] = true;
        }
        let mut succ = current.clone();
        for i in (0..m).rev() {
            used[succ[i]] = false;
            if let Some(v) = (succ[i] + 1..=n).find(|&v| !used[v]) {
                succ[i] = v;
                used[v] = true;
                let mut free = (1..=n).filter(|&v| !used[v]);
                for slot in &mut succ[i + 1..] {
                    *slot = free.next().expect("enough free letters");
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(Injection { word: current, n })
    }
}

pub fn enum_injections(n: usize, m: usize) -> Result<Injections> {
    if m > n {
        return domain_err(format!("no injection of {m} letters into {n}"));
    }
    Ok(Injections { n, next: Some((1..=m).collect()) })
}

/// All permutations of `{1..m}` in lexicographic order.
pub fn enum_permutations(m: usize) -> impl Iterator<Item = Permutation> {
    Injections { n: m, next: Some((1..=m).collect()) }.map(|j| Permutation { images: j.word })
}

/// Lexicographic stream of the `n^m` placements.
#[derive(Clone, Debug)]
pub struct Placements {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Placements {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if let Some(i) = (0..succ.len()).rev().find(|&i| succ[i] < self.n) {
            succ[i] += 1;
            succ[i + 1..].fill(1);
            self.next = Some(succ);
        }
        Some(Placement { word: current, n: self.n })
    }
}

pub fn enum_placements(n: usize, m: usize) -> Result<Placements> {
    if n == 0 && m > 0 {
        return Ok(Placements { n, next: None });
    }
    Ok(Placements { n, next: Some(vec![1; m]) })
}
