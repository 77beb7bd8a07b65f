//! Dyck words over `{x, D}` and the lattice geometry attached to them.
//!
//! A word maps to a staircase path from `(0,0)` to `(n,n)`: `x` is a unit step
//! up, `D` a unit step right. Unit squares are labeled by their top-right
//! corner `(col, row)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

/// One generator of the Weyl algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    D,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' | 'U' | '(' => Some(Letter::X),
            'D' | 'R' | ')' => Some(Letter::D),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::D => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("empty word")]
    Empty,
    #[error("bad character {ch:?} at position {position}")]
    BadCharacter { ch: char, position: usize },
    #[error("prefix violation at position {position}")]
    PrefixViolation { position: usize },
    #[error("unbalanced word: {xs} x's and {ds} D's")]
    UnbalancedWord { xs: usize, ds: usize },
}

/// Parses a word over `{x, D}` (aliases `U`/`R` and `(`/`)`) without checking
/// the Dyck conditions.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, DyckError> {
    text.chars()
        .enumerate()
        .map(|(i, c)| Letter::from_char(c).ok_or(DyckError::BadCharacter { ch: c, position: i + 1 }))
        .collect()
}

pub fn render_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// A validated, nonempty Dyck word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    symbols: Vec<Letter>,
}

impl DyckWord {
    pub fn from_letters(symbols: Vec<Letter>) -> Result<DyckWord, DyckError> {
        if symbols.is_empty() {
            return Err(DyckError::Empty);
        }
        let mut height: i64 = 0;
        let mut first_violation = None;
        for (i, l) in symbols.iter().enumerate() {
            height += match l {
                Letter::X => 1,
                Letter::D => -1,
            };
            if height < 0 && first_violation.is_none() {
                first_violation = Some(i + 1);
            }
        }
        let xs = symbols.iter().filter(|&&l| l == Letter::X).count();
        let ds = symbols.len() - xs;
        if xs != ds {
            return Err(DyckError::UnbalancedWord { xs, ds });
        }
        if let Some(position) = first_violation {
            return Err(DyckError::PrefixViolation { position });
        }
        Ok(DyckWord { symbols })
    }

    /// `(xD)^n`, the word of the edgeless graph.
    pub fn empty_graph(n: usize) -> DyckWord {
        assert!(n >= 1);
        let symbols = (0..n).flat_map(|_| [Letter::X, Letter::D]).collect();
        DyckWord { symbols }
    }

    /// `x^n D^n`, the word of the complete graph.
    pub fn complete_graph(n: usize) -> DyckWord {
        assert!(n >= 1);
        let mut symbols = vec![Letter::X; n];
        symbols.extend(std::iter::repeat_n(Letter::D, n));
        DyckWord { symbols }
    }

    pub fn symbols(&self) -> &[Letter] {
        &self.symbols
    }

    /// Semilength: the number of `x`s.
    pub fn n(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn render(&self) -> String {
        render_letters(&self.symbols)
    }

    /// Length of the leading run of `x`s.
    pub fn leading_xs(&self) -> usize {
        self.symbols.iter().take_while(|&&l| l == Letter::X).count()
    }

    /// Length of the trailing run of `D`s.
    pub fn trailing_ds(&self) -> usize {
        self.symbols.iter().rev().take_while(|&&l| l == Letter::D).count()
    }

    /// `crossing[c-1]` is the height of the path while it steps across column `c`,
    /// i.e. the number of `x`s before the `c`-th `D`.
    pub fn column_crossings(&self) -> Vec<usize> {
        let mut ups = 0;
        let mut out = Vec::with_capacity(self.n());
        for l in &self.symbols {
            match l {
                Letter::X => ups += 1,
                Letter::D => out.push(ups),
            }
        }
        out
    }

    /// Index of the `D` matching each `x`, in order of the `x`s.
    pub(crate) fn matching_pairs(&self) -> Vec<(usize, usize)> {
        let mut stack = Vec::new();
        let mut pairs = vec![(0, 0); self.n()];
        let mut x_index = 0;
        for (pos, l) in self.symbols.iter().enumerate() {
            match l {
                Letter::X => {
                    stack.push((x_index, pos));
                    x_index += 1;
                }
                Letter::D => {
                    let (i, open) = stack.pop().expect("validated Dyck word");
                    pairs[i] = (open, pos);
                }
            }
        }
        pairs
    }
}

impl FromStr for DyckWord {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn parse_word(text: &str) -> Result<DyckWord, DyckError> {
    if text.is_empty() {
        return Err(DyckError::Empty);
    }
    DyckWord::from_letters(parse_letters(text)?)
}

/// A unit square, named by its top-right corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SquareLabel {
    pub col: usize,
    pub row: usize,
}

impl SquareLabel {
    pub fn new(col: usize, row: usize) -> SquareLabel {
        assert!(col >= 1 && row >= 1, "square labels start at 1");
        SquareLabel { col, row }
    }
}

impl fmt::Display for SquareLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("column height {height} exceeds board side {n}")]
    HeightOutOfRange { height: usize, n: usize },
    #[error("column heights are not weakly monotone")]
    NotFerrers,
}

/// A Ferrers board inside the `n × n` box, stored as column heights.
///
/// Columns are top-aligned: column `c` with height `h` holds the squares
/// `(c, n-h+1) ..= (c, n)`. Heights are weakly monotone, so the row sets of
/// any two columns are nested.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    n: usize,
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(n: usize, heights: Vec<usize>) -> Result<FerrersBoard, BoardError> {
        if let Some(&height) = heights.iter().find(|&&h| h > n) {
            return Err(BoardError::HeightOutOfRange { height, n });
        }
        let non_inc = heights.windows(2).all(|w| w[0] >= w[1]);
        let non_dec = heights.windows(2).all(|w| w[0] <= w[1]);
        if !(non_inc || non_dec) {
            return Err(BoardError::NotFerrers);
        }
        Ok(FerrersBoard { n, heights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, sq: SquareLabel) -> bool {
        sq.col >= 1
            && sq.col <= self.heights.len()
            && sq.row <= self.n
            && sq.row > self.n - self.heights[sq.col - 1]
    }

    /// All squares, sorted lexicographically by `(col, row)`.
    pub fn squares(&self) -> Vec<SquareLabel> {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (self.n - h + 1..=self.n).map(move |row| SquareLabel::new(i + 1, row)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let squares: Vec<[usize; 2]> = self.squares().iter().map(|s| [s.col, s.row]).collect();
        serde_json::json!({ "n": self.n, "heights": self.heights, "squares": squares })
    }
}

/// The `2n + 1` lattice points visited by the staircase path of `w`.
pub fn path_vertices(w: &DyckWord) -> Vec<(usize, usize)> {
    let mut p = (0, 0);
    let mut out = Vec::with_capacity(w.symbols.len() + 1);
    out.push(p);
    for l in &w.symbols {
        match l {
            Letter::X => p.1 += 1,
            Letter::D => p.0 += 1,
        }
        out.push(p);
    }
    out
}

/// The board of squares above the path and inside the box.
pub fn board_above(w: &DyckWord) -> FerrersBoard {
    let n = w.n();
    let heights = w.column_crossings().into_iter().map(|y| n - y).collect();
    FerrersBoard { n, heights }
}

/// Squares below the path and strictly above the diagonal.
pub fn squares_below(w: &DyckWord) -> BTreeSet<SquareLabel> {
    w.column_crossings()
        .into_iter()
        .enumerate()
        .flat_map(|(i, y)| {
            let col = i + 1;
            (col + 1..=y).map(move |row| SquareLabel::new(col, row))
        })
        .collect()
}

/// Squares the path turns around: one per `xD` factor, where the `x` is the
/// `row`-th up step and the `D` the `col`-th right step.
pub fn turning_squares(w: &DyckWord) -> BTreeSet<SquareLabel> {
    let (mut ups, mut rights) = (0, 0);
    let mut out = BTreeSet::new();
    for pair in w.symbols.windows(2) {
        if pair[0] == Letter::X {
            ups += 1;
        } else {
            rights += 1;
        }
        if pair == [Letter::X, Letter::D] {
            out.insert(SquareLabel::new(rights + 1, ups));
        }
    }
    out
}

/// Every Dyck word of semilength `n`, in lexicographic order with `x < D`.
pub fn all_words(n: usize) -> Vec<DyckWord> {
    fn go(n: usize, open: usize, closed: usize, cur: &mut Vec<Letter>, out: &mut Vec<DyckWord>) {
        if closed == n {
            out.push(DyckWord { symbols: cur.clone() });
            return;
        }
        if open < n {
            cur.push(Letter::X);
            go(n, open + 1, closed, cur, out);
            cur.pop();
        }
        if closed < open {
            cur.push(Letter::D);
            go(n, open, closed + 1, cur, out);
            cur.pop();
        }
    }
    assert!(n >= 1);
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// A uniformly random Dyck word of semilength `n`.
///
/// Shuffles `n` up steps and `n + 1` down steps, rotates to start just after
/// the first minimum of the prefix sums (cycle lemma), and drops the final `D`.
pub fn random_word<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DyckWord {
    assert!(n >= 1);
    let mut seq = vec![Letter::X; n];
    seq.extend(std::iter::repeat_n(Letter::D, n + 1));
    seq.shuffle(rng);
    let (mut h, mut min, mut at) = (0i64, 0i64, 0usize);
    for (i, l) in seq.iter().enumerate() {
        h += if *l == Letter::X { 1 } else { -1 };
        if h < min {
            min = h;
            at = i + 1;
        }
    }
    seq.rotate_left(at);
    seq.pop();
    DyckWord { symbols: seq }
}
