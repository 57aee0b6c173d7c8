//! Statistic-transporting bijections on wreath-product elements.
//!
//! The central map sends an element with negative-style statistics
//! (ndes, nmajor) to one with flag statistics (fdes, fmajor). It factors
//! through two coordinate systems on top of the unique factorization
//! g = u * pi into an increasing element and a plain permutation:
//!
//! * the alpha encoding records pi together with the multiset multiplicities
//!   of the inverse's colored-position multiset, and
//! * the beta encoding records pi together with per-position residues whose
//!   suffix sums reproduce the color vector.
//!
//! Passing alpha -> beta adds the descent indicator of pi pointwise mod r,
//! which is exactly what trades (ndes, nmajor) for (fdes, fmajor).

use crate::colored_perm::{ColoredPermutation, GroupSpec, PermError};
use crate::statistics::{nneg_multiset, plain_descents};

/// A plain permutation plus multiplicity vector alpha_1..alpha_n with
/// 0 <= alpha_j < r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaEncoding {
    pub spec: GroupSpec,
    pub plain: Vec<usize>,
    pub alpha: Vec<u32>,
}

/// A plain permutation plus residue vector beta_1..beta_n with
/// 0 <= beta_j < r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaEncoding {
    pub spec: GroupSpec,
    pub plain: Vec<usize>,
    pub beta: Vec<u32>,
}

/// Encode g as (pi, alpha): pi is the plain factor of g = u * pi, and
/// alpha_j is the multiplicity of j in the colored-position multiset of
/// g^{-1} (equivalently of u^{-1}).
pub fn encode_alpha(g: &ColoredPermutation) -> AlphaEncoding {
    let factorization = g.decompose();
    let inv = g.inverse();
    let nneg = nneg_multiset(&inv);
    let alpha = (1..=g.spec().n)
        .map(|j| nneg.multiplicity(j) as u32)
        .collect();
    AlphaEncoding {
        spec: g.spec(),
        plain: factorization.plain.plain_part(),
        alpha,
    }
}

/// beta_j = (alpha_j + [j is a descent of pi]) mod r.
pub fn alpha_to_beta(a: &AlphaEncoding) -> BetaEncoding {
    let des = plain_descents(&a.plain);
    let r = a.spec.r;
    let beta = a
        .alpha
        .iter()
        .enumerate()
        .map(|(i, &al)| (al + u32::from(des.contains(&(i + 1)))) % r)
        .collect();
    BetaEncoding {
        spec: a.spec,
        plain: a.plain.clone(),
        beta,
    }
}

/// Inverse of `alpha_to_beta`.
pub fn beta_to_alpha(b: &BetaEncoding) -> AlphaEncoding {
    let des = plain_descents(&b.plain);
    let r = b.spec.r;
    let alpha = b
        .beta
        .iter()
        .enumerate()
        .map(|(i, &be)| (be + r - u32::from(des.contains(&(i + 1)))) % r)
        .collect();
    AlphaEncoding {
        spec: b.spec,
        plain: b.plain.clone(),
        alpha,
    }
}

/// Decode (pi, beta) into the element whose letters are those of pi and
/// whose color at position j is the suffix sum beta_j + ... + beta_n mod r.
pub fn decode_beta(b: &BetaEncoding) -> Result<ColoredPermutation, PermError> {
    let n = b.spec.n;
    let r = b.spec.r;
    let mut colors = vec![0u32; n];
    let mut acc = 0u32;
    for j in (0..n).rev() {
        acc = (acc + b.beta[j]) % r;
        colors[j] = acc;
    }
    let window = b
        .plain
        .iter()
        .zip(&colors)
        .map(|(&l, &c)| (l, c))
        .collect();
    ColoredPermutation::new(b.spec, window)
}

/// Inverse of `decode_beta`: beta_j = color_j - color_{j+1} mod r, with
/// color_{n+1} = 0.
pub fn encode_beta(g: &ColoredPermutation) -> BetaEncoding {
    let n = g.spec().n;
    let r = g.spec().r;
    let beta = (1..=n)
        .map(|j| {
            let next = if j == n { 0 } else { g.color(j + 1) };
            (g.color(j) + r - next) % r
        })
        .collect();
    BetaEncoding {
        spec: g.spec(),
        plain: g.window().iter().map(|&(l, _)| l).collect(),
        beta,
    }
}

/// Decode (pi, alpha) back into a group element: rebuild the increasing
/// factor u whose inverse has alpha_i copies of i in its colored-position
/// multiset — u gives letter i the color (r - alpha_i) mod r, sorted
/// increasing — then compose u * pi.
pub fn decode_alpha(a: &AlphaEncoding) -> Result<ColoredPermutation, PermError> {
    let spec = a.spec;
    let r = spec.r;
    let mut entries: Vec<(usize, u32)> = (1..=spec.n)
        .map(|i| (i, (r - a.alpha[i - 1] % r) % r))
        .collect();
    entries.sort_by(|&x, &y| crate::colored_perm::wreath_cmp(x, y));
    let u = ColoredPermutation::new(spec, entries)?;
    let pi = ColoredPermutation::from_plain(spec, &a.plain)?;
    u.compose(&pi)
}

/// The statistic-transporting bijection: alpha-decode the beta encoding of
/// the input, carrying (ndes, nmajor) to (fdes, fmajor).
pub fn neg_flag_bijection(g: &ColoredPermutation) -> Result<ColoredPermutation, PermError> {
    decode_beta(&alpha_to_beta(&encode_alpha(g)))
}

/// Inverse of `neg_flag_bijection`.
pub fn neg_flag_bijection_inverse(
    g: &ColoredPermutation,
) -> Result<ColoredPermutation, PermError> {
    decode_alpha(&beta_to_alpha(&encode_beta(g)))
}
