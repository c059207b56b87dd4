use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
    // position[v] is the 1-based position of letter v; position[0] unused
    position: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut position = vec![0; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n || position[v] != 0 {
                return Err(Error::invalid(format!("{word:?} is not a permutation of 1..={n}")));
            }
            position[v] = i + 1;
        }
        Ok(Permutation { word, position })
    }

    /// Parses a word of single digits, e.g. `"234658971"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::invalid(format!("bad letter {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("identity is a permutation")
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ⁻¹(v)`: the 1-based position of letter `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn descents(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { " " } else { "" };
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Rearranges `word` into its lexicographic successor; `false` once `word`
/// is the last arrangement.
pub fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub struct Permutations {
    word: Vec<usize>,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            word: (1..=n).collect(),
            done: false,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::new(self.word.clone()).expect("valid arrangement");
        self.done = !next_permutation(&mut self.word);
        Some(out)
    }
}
