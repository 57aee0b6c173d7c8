//! Colored permutations: elements of the wreath product Z_r wr S_n in window
//! notation, with parsing, composition, inversion, the unique factorization
//! through increasing elements, and exhaustive enumeration.
//!
//! An element is written `[p(1)^c_1 p(2)^c_2 ... p(n)^c_n]`: position j holds
//! the image letter p(j) together with its color c_j in {0, ..., r-1}. For
//! r = 2 a window entry `-j` is an accepted alias for `j^1` (signed
//! permutations). Composition acts right-to-left, `(g o h)(i) = g(h(i))`,
//! with colors adding mod r — exactly the product of the corresponding
//! generalized permutation matrices.

use itertools::Itertools;
use std::cmp::Ordering;
use std::fmt;

use crate::statistics::{compare_letters, OrderFlavor};

/// Parameters of the group Z_r wr S_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    /// Order of the cyclic color group; r = 1 gives the symmetric group,
    /// r = 2 the signed permutations.
    pub r: u32,
    /// Number of letters.
    pub n: usize,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("group parameters must satisfy r >= 1 and n >= 1, got r={r}, n={n}")]
    BadSpec { r: u32, n: usize },
    #[error("window entries must form a permutation of 1..={n}: {detail}")]
    NotAPermutation { n: usize, detail: String },
    #[error("color {color} out of range for r={r}")]
    ColorOutOfRange { color: u32, r: u32 },
    #[error("cannot parse window token `{0}`")]
    BadToken(String),
    #[error("window text must be bracketed, like `[2^1 1 3]`")]
    NotBracketed,
    #[error("expected {expected} window entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("operation requires elements of the same group")]
    SpecMismatch,
    #[error("operation requires r = 2, got r = {0}")]
    RequiresSigned(u32),
    #[error("operation requires r = {required}, got r = {got}")]
    RequiresColorOrder { required: u32, got: u32 },
    #[error("element is not in D_n (odd number of negative letters)")]
    NotInD,
    #[error("operation requires n >= {0}")]
    RequiresN(usize),
}

impl GroupSpec {
    pub fn new(r: u32, n: usize) -> Result<Self, PermError> {
        if r < 1 || n < 1 {
            return Err(PermError::BadSpec { r, n });
        }
        Ok(GroupSpec { r, n })
    }

    /// r^n * n!, the order of Z_r wr S_n, as u128 (plenty for desk scale).
    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for i in 1..=self.n as u128 {
            o *= i;
        }
        for _ in 0..self.n {
            o *= self.r as u128;
        }
        o
    }
}

/// One window entry: an image letter in 1..=n with a color in 0..r.
pub type Entry = (usize, u32);

/// An element of Z_r wr S_n, stored positionally: `window[j-1]` is
/// (p(j), c_j).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    spec: GroupSpec,
    window: Vec<Entry>,
}

impl ColoredPermutation {
    pub fn new(spec: GroupSpec, window: Vec<Entry>) -> Result<Self, PermError> {
        if window.len() != spec.n {
            return Err(PermError::WrongLength {
                expected: spec.n,
                found: window.len(),
            });
        }
        let mut seen = vec![false; spec.n + 1];
        for &(letter, color) in &window {
            if letter < 1 || letter > spec.n {
                return Err(PermError::NotAPermutation {
                    n: spec.n,
                    detail: format!("letter {letter} out of range"),
                });
            }
            if seen[letter] {
                return Err(PermError::NotAPermutation {
                    n: spec.n,
                    detail: format!("letter {letter} repeated"),
                });
            }
            seen[letter] = true;
            if color >= spec.r {
                return Err(PermError::ColorOutOfRange { color, r: spec.r });
            }
        }
        Ok(ColoredPermutation { spec, window })
    }

    pub fn identity(spec: GroupSpec) -> Self {
        ColoredPermutation {
            spec,
            window: (1..=spec.n).map(|j| (j, 0)).collect(),
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn window(&self) -> &[Entry] {
        &self.window
    }

    /// Image letter at 1-based window position j.
    pub fn letter(&self, j: usize) -> usize {
        self.window[j - 1].0
    }

    /// Color at 1-based window position j.
    pub fn color(&self, j: usize) -> u32 {
        self.window[j - 1].1
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &(l, c))| l == i + 1 && c == 0)
    }

    /// True when every color is 0.
    pub fn is_plain(&self) -> bool {
        self.window.iter().all(|&(_, c)| c == 0)
    }

    /// The underlying permutation with colors stripped.
    pub fn plain_part(&self) -> Vec<usize> {
        self.window.iter().map(|&(l, _)| l).collect()
    }

    /// Build a color-free element from a plain permutation.
    pub fn from_plain(spec: GroupSpec, perm: &[usize]) -> Result<Self, PermError> {
        Self::new(spec, perm.iter().map(|&l| (l, 0)).collect())
    }

    /// Parse window text like `[4^1 1 2^1 3^1]`; `-j` is accepted for `j^1`
    /// when r = 2.
    pub fn parse_window(text: &str, spec: GroupSpec) -> Result<Self, PermError> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(PermError::NotBracketed)?;
        let mut window = Vec::new();
        for tok in inner.split_whitespace() {
            window.push(parse_token(tok, spec)?);
        }
        Self::new(spec, window)
    }

    /// Composition g.compose(h) = g o h, i.e. apply `h` first: the letter at
    /// position i is g(h(i)) and its color is c^h_i + c^g_{h(i)} mod r.
    pub fn compose(&self, h: &ColoredPermutation) -> Result<ColoredPermutation, PermError> {
        if self.spec != h.spec {
            return Err(PermError::SpecMismatch);
        }
        let window = (1..=self.spec.n)
            .map(|i| {
                let (hl, hc) = h.window[i - 1];
                let (gl, gc) = self.window[hl - 1];
                (gl, (hc + gc) % self.spec.r)
            })
            .collect();
        Ok(ColoredPermutation {
            spec: self.spec,
            window,
        })
    }

    /// Group inverse: letter p(i) maps back to i with color (r - c_i) mod r.
    pub fn inverse(&self) -> ColoredPermutation {
        let mut window = vec![(0usize, 0u32); self.spec.n];
        for (i, &(l, c)) in self.window.iter().enumerate() {
            window[l - 1] = (i + 1, (self.spec.r - c) % self.spec.r);
        }
        ColoredPermutation {
            spec: self.spec,
            window,
        }
    }

    /// Unique factorization g = increasing o plain, where `increasing` has no
    /// type-A descents under the wreath order (its window is the sorted
    /// multiset of g's entries) and `plain` is color-free.
    pub fn decompose(&self) -> Factorization {
        let mut order: Vec<usize> = (0..self.spec.n).collect();
        order.sort_by(|&a, &b| wreath_cmp(self.window[a], self.window[b]));
        // order[k] = the window position whose entry has rank k+1.
        let increasing_window: Vec<Entry> = order.iter().map(|&p| self.window[p]).collect();
        let mut rank = vec![0usize; self.spec.n];
        for (k, &p) in order.iter().enumerate() {
            rank[p] = k + 1;
        }
        let increasing = ColoredPermutation {
            spec: self.spec,
            window: increasing_window,
        };
        let plain = ColoredPermutation {
            spec: self.spec,
            window: rank.iter().map(|&l| (l, 0)).collect(),
        };
        Factorization { increasing, plain }
    }

    /// True iff r = 2 and the number of negative (color-1) letters is even.
    pub fn is_in_d(&self) -> Result<bool, PermError> {
        if self.spec.r != 2 {
            return Err(PermError::RequiresSigned(self.spec.r));
        }
        Ok(self.window.iter().filter(|&&(_, c)| c == 1).count() % 2 == 0)
    }

    /// Reverse the relative order of the letters sitting at color-1
    /// positions: within the sorted set of those letters, the i-th smallest
    /// is exchanged with the i-th largest, while every letter keeps its
    /// position's color. The color vector is unchanged and the operation is
    /// an involution on B_n.
    pub fn reverse_negative_entries(&self) -> Result<ColoredPermutation, PermError> {
        if self.spec.r != 2 {
            return Err(PermError::RequiresSigned(self.spec.r));
        }
        let neg_positions: Vec<usize> = (0..self.spec.n)
            .filter(|&j| self.window[j].1 == 1)
            .collect();
        let mut sorted_letters: Vec<usize> =
            neg_positions.iter().map(|&j| self.window[j].0).collect();
        sorted_letters.sort_unstable();
        let m = sorted_letters.len();
        let mut window = self.window.clone();
        for &j in &neg_positions {
            let rank = sorted_letters
                .binary_search(&self.window[j].0)
                .expect("letter present in its own sorted set");
            window[j].0 = sorted_letters[m - 1 - rank];
        }
        Ok(ColoredPermutation {
            spec: self.spec,
            window,
        })
    }
}

/// Wreath-order comparison of window entries: higher color is smaller, ties
/// broken by letter.
pub fn wreath_cmp(a: Entry, b: Entry) -> Ordering {
    compare_letters(a, b, OrderFlavor::Wreath)
}

fn parse_token(tok: &str, spec: GroupSpec) -> Result<Entry, PermError> {
    let bad = || PermError::BadToken(tok.to_string());
    if let Some(rest) = tok.strip_prefix('-') {
        if spec.r != 2 {
            return Err(bad());
        }
        let letter: usize = parse_plain_number(rest).ok_or_else(bad)?;
        return Ok((letter, 1));
    }
    let (letter_text, color) = match tok.split_once('^') {
        Some((l, c)) => {
            let color: u32 = parse_plain_number(c).ok_or_else(bad)?;
            if color >= spec.r {
                return Err(PermError::ColorOutOfRange { color, r: spec.r });
            }
            (l, color)
        }
        None => (tok, 0),
    };
    let letter: usize = parse_plain_number(letter_text).ok_or_else(bad)?;
    Ok((letter, color))
}

/// Digits only, no leading zeros (except the single digit 0 for colors).
fn parse_plain_number<T: std::str::FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if s.len() > 1 && s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for ColoredPermutation {
    /// Canonical window text: color 0 is omitted, other colors printed as
    /// `letter^color`. Round-trips through `parse_window`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &(l, c)) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if c == 0 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{c}")?;
            }
        }
        write!(f, "]")
    }
}

/// The unique factorization g = increasing o plain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Member of the increasing set I_{r,n}: window weakly ascending under
    /// the wreath order (equivalently, no type-A descents).
    pub increasing: ColoredPermutation,
    /// Color-free permutation.
    pub plain: ColoredPermutation,
}

/// All r^n * n! elements, in a fixed order: lexicographic on the plain
/// window, then lexicographic on the color vector (c_1, ..., c_n).
pub fn enumerate_group(spec: GroupSpec) -> Vec<ColoredPermutation> {
    let mut out = Vec::new();
    for perm in (1..=spec.n).permutations(spec.n) {
        let mut colors = vec![0u32; spec.n];
        loop {
            let window: Vec<Entry> = perm.iter().zip(&colors).map(|(&l, &c)| (l, c)).collect();
            out.push(ColoredPermutation { spec, window });
            // Increment the color vector in lexicographic (odometer) order,
            // most significant digit first.
            let mut pos = spec.n;
            while pos > 0 {
                colors[pos - 1] += 1;
                if colors[pos - 1] < spec.r {
                    break;
                }
                colors[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

/// Elements of D_n (r = 2, evenly many negative letters), in enumeration
/// order.
pub fn enumerate_d(n: usize) -> Vec<ColoredPermutation> {
    let spec = GroupSpec::new(2, n).expect("valid spec");
    enumerate_group(spec)
        .into_iter()
        .filter(|g| g.is_in_d().unwrap())
        .collect()
}

/// The increasing elements (empty type-A descent set) of Z_r wr S_n under
/// `order`, which must be `Wreath` or (for r = 2) `Natural`. With
/// `even_only`, restrict to elements with an even number of colored letters
/// (the set I*_{2,n} feeding the type-D theorems).
///
/// Each increasing element is determined by a color-per-letter assignment:
/// give letter i a color, then sort the letters ascending under `order`.
pub fn enumerate_increasing(
    spec: GroupSpec,
    order: OrderFlavor,
    even_only: bool,
) -> Result<Vec<ColoredPermutation>, PermError> {
    match order {
        OrderFlavor::Wreath => {}
        OrderFlavor::Natural => {
            if spec.r != 2 {
                return Err(PermError::RequiresSigned(spec.r));
            }
        }
        _ => {
            return Err(PermError::RequiresColorOrder {
                required: spec.r,
                got: spec.r,
            })
        }
    }
    let mut out = Vec::new();
    let mut colors = vec![0u32; spec.n]; // colors[i] = color of letter i+1
    loop {
        if !even_only || colors.iter().filter(|&&c| c != 0).count() % 2 == 0 {
            let mut entries: Vec<Entry> = (1..=spec.n).map(|l| (l, colors[l - 1])).collect();
            entries.sort_by(|&a, &b| compare_letters(a, b, order));
            out.push(ColoredPermutation {
                spec,
                window: entries,
            });
        }
        let mut pos = spec.n;
        while pos > 0 {
            colors[pos - 1] += 1;
            if colors[pos - 1] < spec.r {
                break;
            }
            colors[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    Ok(out)
}
