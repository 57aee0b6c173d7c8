//! Descent and major-index statistics on colored permutations, in all four
//! order flavors used by the generating-function identities, together with
//! the negative/flag statistic families, color-change vectors, and the
//! classification of wreath-order descents by cause.
//!
//! Positions are 1-based window positions; descent sets may include the
//! sentinel position 0 depending on the flavor. Sentinels are materialized
//! only inside `descent_set`, never in windows.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::colored_perm::{ColoredPermutation, Entry, PermError};

/// The four total orders on colored letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderFlavor {
    /// Higher color is smaller; ties broken by letter. For r = 3:
    /// 1^2 < 2^2 < 3^2 < 1^1 < 2^1 < 3^1 < 1^0 < 2^0 < 3^0.
    /// Descent positions 0..n-1, left sentinel 0^0.
    Wreath,
    /// Lower color is smaller; ties broken by letter. For r = 3:
    /// 1^0 < 2^0 < 3^0 < 1^1 < ... < 3^2.
    /// Descent positions 1..n, right sentinel (n+1)^0.
    Steingrimsson,
    /// r = 2 only, letters read as signed integers: -n < ... < -1 < 1 < ... < n.
    /// Descent positions 0..n-1, left sentinel 0.
    Natural,
    /// r = 2 only: -1 < -2 < ... < -n < 1 < 2 < ... < n.
    /// Descent positions 0..n-1, left sentinel -e_2 p(2); needs n >= 2.
    NaturalD,
}

/// Compare two window entries under the given order. Sentinels (letter 0,
/// or letter n+1 with color 0) are valid inputs.
pub fn compare_letters(a: Entry, b: Entry, order: OrderFlavor) -> Ordering {
    match order {
        // Higher color first means comparing colors reversed.
        OrderFlavor::Wreath => b.1.cmp(&a.1).then(a.0.cmp(&b.0)),
        OrderFlavor::Steingrimsson => a.1.cmp(&b.1).then(a.0.cmp(&b.0)),
        OrderFlavor::Natural => signed_value(a).cmp(&signed_value(b)),
        OrderFlavor::NaturalD => {
            // Negatives first, by letter ascending (-1 < -2 < ...), then
            // positives by letter ascending.
            let key = |e: Entry| (if e.1 == 1 { 0 } else { 1 }, e.0);
            key(a).cmp(&key(b))
        }
    }
}

fn signed_value(e: Entry) -> i64 {
    if e.1 == 1 {
        -(e.0 as i64)
    } else {
        e.0 as i64
    }
}

fn require_signed(g: &ColoredPermutation) -> Result<(), PermError> {
    if g.spec().r != 2 {
        return Err(PermError::RequiresSigned(g.spec().r));
    }
    Ok(())
}

fn check_flavor(g: &ColoredPermutation, order: OrderFlavor) -> Result<(), PermError> {
    match order {
        OrderFlavor::Wreath | OrderFlavor::Steingrimsson => Ok(()),
        OrderFlavor::Natural => require_signed(g),
        OrderFlavor::NaturalD => {
            require_signed(g)?;
            if g.spec().n < 2 {
                return Err(PermError::RequiresN(2));
            }
            if !g.is_in_d()? {
                return Err(PermError::NotInD);
            }
            Ok(())
        }
    }
}

/// Classical descent set of a color-free permutation: positions j in [n-1]
/// with p(j) > p(j+1).
pub fn classical_descents(g: &ColoredPermutation) -> Result<BTreeSet<usize>, PermError> {
    if !g.is_plain() {
        return Err(PermError::NotAPermutation {
            n: g.spec().n,
            detail: "classical statistics need a color-free element".into(),
        });
    }
    Ok(plain_descents(&g.plain_part()))
}

/// Descents of a plain permutation given as a letter sequence.
pub fn plain_descents(perm: &[usize]) -> BTreeSet<usize> {
    (1..perm.len())
        .filter(|&j| perm[j - 1] > perm[j])
        .collect()
}

/// Classical major index: sum of descent positions.
pub fn classical_maj(g: &ColoredPermutation) -> Result<usize, PermError> {
    Ok(classical_descents(g)?.iter().sum())
}

/// Flavor descent set, sentinels included:
/// wreath/natural from position 0 (left sentinel 0^0, resp. value 0),
/// steingrimsson over 1..n (right sentinel (n+1)^0),
/// naturalD from position 0 (left sentinel -e_2 p(2)).
pub fn descent_set(
    g: &ColoredPermutation,
    order: OrderFlavor,
) -> Result<BTreeSet<usize>, PermError> {
    check_flavor(g, order)?;
    let n = g.spec().n;
    let w = g.window();
    let mut set = BTreeSet::new();
    match order {
        OrderFlavor::Wreath | OrderFlavor::Natural => {
            if compare_letters((0, 0), w[0], order) == Ordering::Greater {
                set.insert(0);
            }
            for j in 1..n {
                if compare_letters(w[j - 1], w[j], order) == Ordering::Greater {
                    set.insert(j);
                }
            }
        }
        OrderFlavor::Steingrimsson => {
            for j in 1..n {
                if compare_letters(w[j - 1], w[j], order) == Ordering::Greater {
                    set.insert(j);
                }
            }
            if compare_letters(w[n - 1], (n + 1, 0), order) == Ordering::Greater {
                set.insert(n);
            }
        }
        OrderFlavor::NaturalD => {
            // The type-D natural descent set compares entries in the natural
            // (integer) order; only the sentinel differs from the signed
            // natural descent set: position 0 holds -e_2 p(2), the
            // position-2 entry with flipped sign.
            let sentinel = (w[1].0, 1 - w[1].1);
            if compare_letters(sentinel, w[0], OrderFlavor::Natural) == Ordering::Greater {
                set.insert(0);
            }
            for j in 1..n {
                if compare_letters(w[j - 1], w[j], OrderFlavor::Natural) == Ordering::Greater {
                    set.insert(j);
                }
            }
        }
    }
    Ok(set)
}

/// Number of flavor descents.
pub fn des(g: &ColoredPermutation, order: OrderFlavor) -> Result<usize, PermError> {
    Ok(descent_set(g, order)?.len())
}

/// Type-A descent set: interior positions 1..n-1 only, no sentinels.
pub fn type_a_descents(
    g: &ColoredPermutation,
    order: OrderFlavor,
) -> Result<BTreeSet<usize>, PermError> {
    check_flavor(g, order)?;
    let w = g.window();
    Ok((1..g.spec().n)
        .filter(|&j| compare_letters(w[j - 1], w[j], order) == Ordering::Greater)
        .collect())
}

/// Sum of type-A descent positions.
pub fn type_a_major(g: &ColoredPermutation, order: OrderFlavor) -> Result<usize, PermError> {
    Ok(type_a_descents(g, order)?.iter().sum())
}

/// Positions carrying a nonzero color.
pub fn neg_set(g: &ColoredPermutation) -> BTreeSet<usize> {
    (1..=g.spec().n).filter(|&j| g.color(j) != 0).collect()
}

/// Number of nonzero colors (for r = 2 this equals `col`).
pub fn neg(g: &ColoredPermutation) -> usize {
    neg_set(g).len()
}

/// Color sum c_1 + ... + c_n.
pub fn col(g: &ColoredPermutation) -> usize {
    (1..=g.spec().n).map(|j| g.color(j) as usize).sum()
}

/// A multiset of positions, stored as sorted (position, multiplicity) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositionMultiset {
    pairs: Vec<(usize, usize)>,
}

impl PositionMultiset {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<(usize, usize)> =
            counts.into_iter().filter(|&(_, m)| m > 0).collect();
        pairs.sort();
        PositionMultiset { pairs }
    }

    pub fn from_set(set: &BTreeSet<usize>) -> Self {
        PositionMultiset {
            pairs: set.iter().map(|&p| (p, 1)).collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn multiplicity(&self, pos: usize) -> usize {
        self.pairs
            .iter()
            .find(|&&(p, _)| p == pos)
            .map_or(0, |&(_, m)| m)
    }

    /// Total number of elements counted with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Sum of elements counted with multiplicity.
    pub fn weighted_sum(&self) -> usize {
        self.pairs.iter().map(|&(p, m)| p * m).sum()
    }

    /// Multiset union: underlying sets united, multiplicities added.
    pub fn union(&self, other: &PositionMultiset) -> PositionMultiset {
        let mut counts = std::collections::BTreeMap::new();
        for &(p, m) in self.pairs.iter().chain(&other.pairs) {
            *counts.entry(p).or_insert(0) += m;
        }
        PositionMultiset::from_counts(counts)
    }

    /// Expanded element list, e.g. {1, 2, 2, 5}.
    pub fn elements(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat(p).take(m))
            .collect()
    }
}

/// Negative inverse multiset NNeg(g): position i appears with multiplicity
/// c_i. The identities always apply this to g^{-1}; callers invert first.
pub fn nneg_multiset(g: &ColoredPermutation) -> PositionMultiset {
    PositionMultiset::from_counts((1..=g.spec().n).map(|i| (i, g.color(i) as usize)))
}

/// Negative descent multiset NDes(g) = Des_A(g) union NNeg(g^{-1}),
/// wreath-order type-A descents, multiplicities added.
pub fn ndes_multiset(g: &ColoredPermutation) -> PositionMultiset {
    let des_a = type_a_descents(g, OrderFlavor::Wreath).expect("wreath order is unrestricted");
    PositionMultiset::from_set(&des_a).union(&nneg_multiset(&g.inverse()))
}

/// Cardinality of NDes.
pub fn ndes(g: &ColoredPermutation) -> usize {
    ndes_multiset(g).cardinality()
}

/// Weighted sum of NDes.
pub fn nmajor(g: &ColoredPermutation) -> usize {
    ndes_multiset(g).weighted_sum()
}

/// Color-change vector a_j = (c_j - c_{j+1}) mod r, with c_{n+1} = 0.
pub fn color_changes(g: &ColoredPermutation) -> Vec<u32> {
    let n = g.spec().n;
    let r = g.spec().r;
    (1..=n)
        .map(|j| {
            let next = if j == n { 0 } else { g.color(j + 1) };
            (g.color(j) + r - next) % r
        })
        .collect()
}

/// Total color change ch = sum of the color-change vector.
pub fn ch(g: &ColoredPermutation) -> usize {
    color_changes(g).iter().map(|&a| a as usize).sum()
}

/// Flag descent statistic fdes = r * des_A + c_1 (wreath order).
pub fn fdes(g: &ColoredPermutation) -> usize {
    g.spec().r as usize * type_a_descents(g, OrderFlavor::Wreath).unwrap().len()
        + g.color(1) as usize
}

/// Flag major index fmajor = r * major_A + col (wreath order).
pub fn fmajor(g: &ColoredPermutation) -> usize {
    g.spec().r as usize * type_a_major(g, OrderFlavor::Wreath).unwrap() + col(g)
}

/// Natural-order type-A major index (r = 2).
pub fn nat_type_a_major(g: &ColoredPermutation) -> Result<usize, PermError> {
    type_a_major(g, OrderFlavor::Natural)
}

/// Natural flag major index natfmaj = 2 * natmajor_A + neg (r = 2).
pub fn natfmaj(g: &ColoredPermutation) -> Result<usize, PermError> {
    Ok(2 * nat_type_a_major(g)? + neg(g))
}

/// Type-D negative descent multiset
/// DNDes = Des_A(naturalD order) union {j - 1 : j in Neg(g^{-1}) \ {1}}.
pub fn dndes_multiset(g: &ColoredPermutation) -> Result<PositionMultiset, PermError> {
    let des_a = type_a_descents(g, OrderFlavor::NaturalD)?;
    let shifted: BTreeSet<usize> = neg_set(&g.inverse())
        .into_iter()
        .filter(|&j| j != 1)
        .map(|j| j - 1)
        .collect();
    Ok(PositionMultiset::from_set(&des_a).union(&PositionMultiset::from_set(&shifted)))
}

/// Cardinality of DNDes.
pub fn dndes(g: &ColoredPermutation) -> Result<usize, PermError> {
    Ok(dndes_multiset(g)?.cardinality())
}

/// Weighted sum of DNDes.
pub fn dnmajor(g: &ColoredPermutation) -> Result<usize, PermError> {
    Ok(dndes_multiset(g)?.weighted_sum())
}

/// Why a wreath-order position is (or is not) a descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentCause {
    /// Interior descent forced by a color increase: c_j < c_{j+1}.
    ColorChange,
    /// Interior descent with equal colors and p(j) > p(j+1).
    Standard,
    /// Descent at position 0, present exactly when c_1 != 0.
    Zero,
    /// Not a descent.
    None,
}

/// Classify every position 0..n-1 by its wreath-order descent cause.
/// Index j of the result is position j.
pub fn classify_descents(g: &ColoredPermutation) -> Vec<DescentCause> {
    let n = g.spec().n;
    let mut causes = vec![DescentCause::None; n];
    if g.color(1) != 0 {
        causes[0] = DescentCause::Zero;
    }
    for j in 1..n {
        if g.color(j) < g.color(j + 1) {
            causes[j] = DescentCause::ColorChange;
        } else if g.color(j) == g.color(j + 1) && g.letter(j) > g.letter(j + 1) {
            causes[j] = DescentCause::Standard;
        }
    }
    causes
}

/// Interior positions tagged `ColorChange` (descending order, matching the
/// right-to-left partial-sum bookkeeping of the color-change vector).
pub fn color_change_descent_positions(g: &ColoredPermutation) -> Vec<usize> {
    classify_descents(g)
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c == DescentCause::ColorChange)
        .map(|(j, _)| j)
        .collect()
}
