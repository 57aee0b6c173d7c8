//! Coefficient-by-coefficient verification of the generating-function
//! identities: each identity pairs a closed product form (left-hand side)
//! with a sum over a reflection group or a related index set (right-hand
//! side), both expanded as truncated formal power series in exact integer
//! arithmetic and compared monomial by monomial.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use crate::colored_perm::{
    enumerate_d, enumerate_group, enumerate_increasing, ColoredPermutation, GroupSpec, PermError,
};
use crate::exec::{map_reduce, ExecMode};
use crate::series::{
    expand, lhs_series, ExponentVector, LhsKind, Polynomial, RationalExpr, SeriesError,
    TruncatedSeries, VarId,
};
use crate::statistics::{
    ch, color_changes, des, descent_set, dndes, dnmajor, fdes, fmajor, natfmaj, ndes, neg,
    nmajor, plain_descents, OrderFlavor,
};

/// Hard cap on group size for a single verification: r^n * n! must not
/// exceed this.
pub const BUDGET_CAP: u128 = 10_000_000;

#[derive(Debug, thiserror::Error)]
pub enum IdentityError {
    #[error("group of size {required} exceeds the enumeration budget {cap}")]
    Budget { required: u128, cap: u128 },
    #[error("identity {id} is defined for r = {expected}, got r = {got}")]
    FixedR { id: String, expected: u32, got: u32 },
    #[error("identity {id} needs n >= {min}, got n = {got}")]
    MinN { id: String, min: usize, got: usize },
    #[error("unknown identity id: {0}")]
    UnknownId(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The verifiable identities. Bivariate forms live in t (and q, s); the
/// multivariate forms keep one variable per coordinate, graded by z0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// sum_k (k+1)^n t^k = sum_{S_n} t^des / (1-t)^{n+1}
    EulerianA,
    /// sum_k [k+1]_q^n t^k = sum_{S_n} t^des q^maj / prod_j (1 - t q^j)
    Carlitz,
    /// Multivariate refinement of Carlitz over the cube triangulation.
    MultivariateA,
    /// sum_k (rk+1)^n t^k = sum_{G_rn} t^des / (1-t)^{n+1}
    WreathEulerian,
    /// sum_k [k+1]_q^n t^k = sum t^ndes q^nmajor / ((1-t) prod (1-t^r q^rj))
    WreathNeg,
    /// Same denominator with t^fdes q^fmajor in the numerator.
    WreathFlag,
    /// Multivariate refinement of WreathNeg.
    WreathNegMulti,
    /// Multivariate refinement of WreathFlag.
    WreathFlagMulti,
    /// sum_k [rk+1]_q^n t^k = sum t^des q^fmajor / prod_j (1 - t q^rj)
    WreathFlagRk,
    /// Multivariate refinement of WreathFlagRk.
    WreathFlagRkMulti,
    /// sum_k ([k+1]_q + s[k]_q)^n t^k over B_n with s^neg t^natdes q^natmaj.
    ChowGessel,
    /// sum_k [2k+1]_q^n t^k over B_n with t^natdes q^natfmaj.
    ChowGesselFlag,
    /// Multivariate signed-cube identity over B_n.
    BNaturalMulti,
    /// WreathFlagRkMulti at r = 2.
    BFlagMulti,
    /// Type-D Eulerian identity over D_n.
    DEulerian,
    /// sum_k [k+1]_q^n t^k over D_n with t^dndes q^dnmajor.
    DNeg,
    /// Multivariate refinement of DNeg.
    DNegMulti,
}

pub const ALL_IDENTITIES: [IdentityId; 17] = [
    IdentityId::EulerianA,
    IdentityId::Carlitz,
    IdentityId::MultivariateA,
    IdentityId::WreathEulerian,
    IdentityId::WreathNeg,
    IdentityId::WreathFlag,
    IdentityId::WreathNegMulti,
    IdentityId::WreathFlagMulti,
    IdentityId::WreathFlagRk,
    IdentityId::WreathFlagRkMulti,
    IdentityId::ChowGessel,
    IdentityId::ChowGesselFlag,
    IdentityId::BNaturalMulti,
    IdentityId::BFlagMulti,
    IdentityId::DEulerian,
    IdentityId::DNeg,
    IdentityId::DNegMulti,
];

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::EulerianA => "eulerianA",
            IdentityId::Carlitz => "carlitz",
            IdentityId::MultivariateA => "multivariateA",
            IdentityId::WreathEulerian => "wreathEulerian",
            IdentityId::WreathNeg => "wreathNeg",
            IdentityId::WreathFlag => "wreathFlag",
            IdentityId::WreathNegMulti => "wreathNegMulti",
            IdentityId::WreathFlagMulti => "wreathFlagMulti",
            IdentityId::WreathFlagRk => "wreathFlagRk",
            IdentityId::WreathFlagRkMulti => "wreathFlagRkMulti",
            IdentityId::ChowGessel => "chowGessel",
            IdentityId::ChowGesselFlag => "chowGesselFlag",
            IdentityId::BNaturalMulti => "bNaturalMulti",
            IdentityId::BFlagMulti => "bFlagMulti",
            IdentityId::DEulerian => "dEulerian",
            IdentityId::DNeg => "dNeg",
            IdentityId::DNegMulti => "dNegMulti",
        }
    }

    /// Some identities only exist for one color count.
    pub fn fixed_r(&self) -> Option<u32> {
        match self {
            IdentityId::EulerianA | IdentityId::Carlitz | IdentityId::MultivariateA => Some(1),
            IdentityId::ChowGessel
            | IdentityId::ChowGesselFlag
            | IdentityId::BNaturalMulti
            | IdentityId::BFlagMulti
            | IdentityId::DEulerian
            | IdentityId::DNeg
            | IdentityId::DNegMulti => Some(2),
            _ => None,
        }
    }

    /// Type-D statistics need at least two letters.
    pub fn min_n(&self) -> usize {
        match self {
            IdentityId::DEulerian | IdentityId::DNeg | IdentityId::DNegMulti => 2,
            _ => 1,
        }
    }

    fn lhs_kind(&self) -> (LhsKind, bool) {
        // The flag records whether q must be evaluated at 1 afterwards.
        match self {
            IdentityId::EulerianA => (LhsKind::QPower, true),
            IdentityId::Carlitz => (LhsKind::QPower, false),
            IdentityId::MultivariateA => (LhsKind::ProductK1, false),
            IdentityId::WreathEulerian => (LhsKind::QPowerRK, true),
            IdentityId::WreathNeg => (LhsKind::QPower, false),
            IdentityId::WreathFlag => (LhsKind::QPower, false),
            IdentityId::WreathNegMulti => (LhsKind::ProductK1, false),
            IdentityId::WreathFlagMulti => (LhsKind::ProductK1, false),
            IdentityId::WreathFlagRk => (LhsKind::QPowerRK, false),
            IdentityId::WreathFlagRkMulti => (LhsKind::ProductRK1, false),
            IdentityId::ChowGessel => (LhsKind::SignedQ, false),
            IdentityId::ChowGesselFlag => (LhsKind::Q2k1, false),
            IdentityId::BNaturalMulti => (LhsKind::SignedMulti, false),
            IdentityId::BFlagMulti => (LhsKind::ProductRK1, false),
            IdentityId::DEulerian => (LhsKind::TypeD, false),
            IdentityId::DNeg => (LhsKind::QPower, false),
            IdentityId::DNegMulti => (LhsKind::ProductK1, false),
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_IDENTITIES
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

/// Uniform +1 perturbation of a right-hand-side statistic, used to check
/// that the comparison actually detects wrong series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    None,
    /// Bump the grading statistic (t- or z0-exponent) of every element.
    Grading,
    /// Bump the q-statistic of every element (bivariate identities).
    QStat,
}

fn validate(id: IdentityId, r: u32, n: usize) -> Result<GroupSpec, IdentityError> {
    if let Some(expected) = id.fixed_r() {
        if r != expected {
            return Err(IdentityError::FixedR {
                id: id.to_string(),
                expected,
                got: r,
            });
        }
    }
    if n < id.min_n() {
        return Err(IdentityError::MinN {
            id: id.to_string(),
            min: id.min_n(),
            got: n,
        });
    }
    let spec = GroupSpec::new(r, n)?;
    let required = spec.order();
    if required > BUDGET_CAP {
        return Err(IdentityError::Budget {
            required,
            cap: BUDGET_CAP,
        });
    }
    Ok(spec)
}

/// The closed-form left-hand side as a truncated series.
pub fn lhs_of(id: IdentityId, r: u32, n: usize, k: u32) -> Result<TruncatedSeries, IdentityError> {
    validate(id, r, n)?;
    let (kind, eval_q_one) = id.lhs_kind();
    let mut series = lhs_series(kind, r, n, k);
    if eval_q_one {
        let mut map = BTreeMap::new();
        map.insert(VarId::Q, (VarId::Q, 0));
        series = series.specialize(&map);
    }
    Ok(series)
}

/// Prefix monomials z_{p(1)} ... z_{p(j)} for j = 0..n.
fn prefixes(perm: &[usize]) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::one()];
    for &p in perm {
        out.push(out.last().unwrap().mul(&ExponentVector::var(VarId::Z(p), 1)));
    }
    out
}

fn tq(t_exp: usize, q_exp: usize) -> ExponentVector {
    ExponentVector::from_pairs([(VarId::T, t_exp as u32), (VarId::Q, q_exp as u32)])
}

fn perturb_monomial(m: ExponentVector, perturb: Perturbation, grading: VarId) -> ExponentVector {
    match perturb {
        Perturbation::None => m,
        Perturbation::Grading => m.mul(&ExponentVector::var(grading, 1)),
        Perturbation::QStat => m.mul(&ExponentVector::var(VarId::Q, 1)),
    }
}

/// Sum of t^a q^b monomials over a list of elements, as a rational
/// expression over a fixed denominator, expanded to order k.
fn bivariate_rhs<F>(
    elements: Vec<ColoredPermutation>,
    stats: F,
    denominator: Vec<ExponentVector>,
    k: u32,
    mode: ExecMode,
    perturb: Perturbation,
) -> Result<TruncatedSeries, IdentityError>
where
    F: Fn(&ColoredPermutation) -> Result<ExponentVector, PermError> + Sync + Send,
{
    let mut numerator = Polynomial::zero();
    let one = BigInt::one();
    for g in &elements {
        let m = perturb_monomial(stats(g)?, perturb, VarId::T);
        numerator.add_term(m, &one);
    }
    // The numerator accumulation is cheap; the expansion is where truncation
    // work happens, so there is nothing useful to parallelize beyond the
    // per-permutation identities (handled by the multivariate builders).
    let _ = mode;
    Ok(expand(&RationalExpr::new(numerator, denominator), k)?)
}

/// The right-hand side of an identity as a truncated series, optionally with
/// every element's statistic bumped by one.
pub fn rhs_series_perturbed(
    id: IdentityId,
    r: u32,
    n: usize,
    k: u32,
    mode: ExecMode,
    perturb: Perturbation,
) -> Result<TruncatedSeries, IdentityError> {
    let spec = validate(id, r, n)?;
    let t = |e: usize| ExponentVector::var(VarId::T, e as u32);
    let all_t = |cnt: usize| vec![ExponentVector::var(VarId::T, 1); cnt];
    match id {
        IdentityId::EulerianA => {
            let perms = enumerate_group(spec);
            bivariate_rhs(
                perms,
                |g| Ok(t(plain_descents(&g.plain_part()).len())),
                all_t(n + 1),
                k,
                mode,
                perturb,
            )
        }
        IdentityId::Carlitz => {
            let den = (0..=n).map(|j| tq(1, j)).collect();
            bivariate_rhs(
                enumerate_group(spec),
                |g| {
                    let d = plain_descents(&g.plain_part());
                    Ok(tq(d.len(), d.iter().sum()))
                },
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::WreathEulerian => bivariate_rhs(
            enumerate_group(spec),
            |g| Ok(t(des(g, OrderFlavor::Wreath)?)),
            all_t(n + 1),
            k,
            mode,
            perturb,
        ),
        IdentityId::WreathNeg | IdentityId::WreathFlag => {
            let mut den = vec![ExponentVector::var(VarId::T, 1)];
            for j in 1..=n {
                den.push(tq(r as usize, r as usize * j));
            }
            let flag = id == IdentityId::WreathFlag;
            bivariate_rhs(
                enumerate_group(spec),
                move |g| {
                    Ok(if flag {
                        tq(fdes(g), fmajor(g))
                    } else {
                        tq(ndes(g), nmajor(g))
                    })
                },
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::WreathFlagRk => {
            let den = (0..=n).map(|j| tq(1, r as usize * j)).collect();
            bivariate_rhs(
                enumerate_group(spec),
                |g| Ok(tq(des(g, OrderFlavor::Wreath)?, fmajor(g))),
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::ChowGessel => {
            let den = (0..=n).map(|j| tq(1, j)).collect();
            bivariate_rhs(
                enumerate_group(spec),
                |g| {
                    let d = descent_set(g, OrderFlavor::Natural)?;
                    Ok(tq(d.len(), d.iter().sum())
                        .mul(&ExponentVector::from_pairs([(VarId::S, neg(g) as u32)])))
                },
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::ChowGesselFlag => {
            let den = (0..=n).map(|j| tq(1, 2 * j)).collect();
            bivariate_rhs(
                enumerate_group(spec),
                |g| Ok(tq(des(g, OrderFlavor::Natural)?, natfmaj(g)?)),
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::DEulerian => bivariate_rhs(
            enumerate_d(n),
            |g| Ok(t(des(g, OrderFlavor::NaturalD)?)),
            all_t(n + 1),
            k,
            mode,
            perturb,
        ),
        IdentityId::DNeg => {
            let mut den = vec![ExponentVector::var(VarId::T, 1), tq(1, n)];
            for j in 1..n {
                den.push(tq(2, 2 * j));
            }
            bivariate_rhs(
                enumerate_d(n),
                |g| Ok(tq(dndes(g)?, dnmajor(g)?)),
                den,
                k,
                mode,
                perturb,
            )
        }
        IdentityId::MultivariateA
        | IdentityId::WreathNegMulti
        | IdentityId::WreathFlagMulti
        | IdentityId::WreathFlagRkMulti
        | IdentityId::BFlagMulti
        | IdentityId::DNegMulti => multivariate_over_perms(id, spec, k, mode, perturb),
        IdentityId::BNaturalMulti => {
            let elements = enumerate_group(spec);
            let series = map_reduce(
                mode,
                elements,
                |g| {
                    let expr = signed_cube_term(g).expect("valid signed element");
                    expand(&expr, k).expect("graded denominator")
                },
                || TruncatedSeries::zero(k),
                |a, b| a.add(&b),
            );
            Ok(apply_perturbation(series, perturb, VarId::Z(0)))
        }
    }
}

/// Convenience wrapper without perturbation.
pub fn rhs_series(
    id: IdentityId,
    r: u32,
    n: usize,
    k: u32,
    mode: ExecMode,
) -> Result<TruncatedSeries, IdentityError> {
    rhs_series_perturbed(id, r, n, k, mode, Perturbation::None)
}

fn apply_perturbation(
    series: TruncatedSeries,
    perturb: Perturbation,
    grading: VarId,
) -> TruncatedSeries {
    match perturb {
        Perturbation::None => series,
        Perturbation::Grading => series.mul_poly(&Polynomial::variable(grading)),
        Perturbation::QStat => series.mul_poly(&Polynomial::variable(VarId::Q)),
    }
}

/// The multivariate right-hand sides share a structure: for each plain
/// permutation, a fixed denominator and a numerator summed over a color
/// index set. Each permutation's rational term is expanded independently
/// (this is the data-parallel workload).
fn multivariate_over_perms(
    id: IdentityId,
    spec: GroupSpec,
    k: u32,
    mode: ExecMode,
    perturb: Perturbation,
) -> Result<TruncatedSeries, IdentityError> {
    use itertools::Itertools;
    let n = spec.n;
    let r = spec.r;
    // Pre-enumerate the color index set shared by every permutation.
    let color_index: Vec<ColoredPermutation> = match id {
        IdentityId::MultivariateA => Vec::new(),
        IdentityId::WreathNegMulti => {
            enumerate_increasing(spec, OrderFlavor::Wreath, false)?
        }
        IdentityId::DNegMulti => enumerate_increasing(spec, OrderFlavor::Wreath, true)?,
        _ => Vec::new(),
    };
    let color_vectors: Vec<Vec<u32>> = match id {
        IdentityId::WreathFlagMulti | IdentityId::WreathFlagRkMulti | IdentityId::BFlagMulti => {
            (0..n).map(|_| 0..r).multi_cartesian_product().collect()
        }
        _ => Vec::new(),
    };
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    let result = map_reduce(
        mode,
        perms,
        |perm| -> TruncatedSeries {
            let expr = multivariate_term(id, spec, perm, &color_index, &color_vectors)
                .expect("multivariate term construction cannot fail on valid input");
            expand(&expr, k).expect("graded denominator")
        },
        || TruncatedSeries::zero(k),
        |a, b| a.add(&b),
    );
    Ok(apply_perturbation(result, perturb, VarId::Z(0)))
}

/// One permutation's rational term of a multivariate identity.
fn multivariate_term(
    id: IdentityId,
    spec: GroupSpec,
    perm: &[usize],
    color_index: &[ColoredPermutation],
    color_vectors: &[Vec<u32>],
) -> Result<RationalExpr, IdentityError> {
    let n = spec.n;
    let r = spec.r;
    let pref = prefixes(perm);
    let z0 = ExponentVector::var(VarId::Z(0), 1);
    let des_set = plain_descents(perm);
    let one = BigInt::one();
    match id {
        IdentityId::MultivariateA => {
            let mut num_m = ExponentVector::one();
            for &j in &des_set {
                num_m = num_m.mul(&z0).mul(&pref[j]);
            }
            let den = (0..=n).map(|j| z0.mul(&pref[j])).collect();
            Ok(RationalExpr::new(
                Polynomial::monomial(num_m, one),
                den,
            ))
        }
        IdentityId::WreathNegMulti => {
            // Descent part depends only on the permutation; the colored part
            // sums the inverse colored-position monomials over the
            // increasing elements.
            let mut des_m = ExponentVector::one();
            for &j in &des_set {
                des_m = des_m.mul(&z0).mul(&pref[j]);
            }
            let mut num = Polynomial::zero();
            for u in color_index {
                let mult = crate::statistics::nneg_multiset(&u.inverse());
                let mut m = des_m.clone();
                for &(pos, count) in mult.pairs() {
                    m = m.mul(&z0.mul(&pref[pos]).pow(count as u32));
                }
                num.add_term(m, &one);
            }
            let mut den = vec![z0.clone()];
            for j in 1..=n {
                den.push(z0.mul(&pref[j]).pow(r));
            }
            Ok(RationalExpr::new(num, den))
        }
        IdentityId::WreathFlagMulti => {
            let mut num = Polynomial::zero();
            for colors in color_vectors {
                let a = color_steps(colors, r);
                let mut m = ExponentVector::one();
                for j in 1..=n {
                    if a[j - 1] > 0 {
                        m = m.mul(&z0.mul(&pref[j]).pow(a[j - 1]));
                    } else if des_set.contains(&j) {
                        m = m.mul(&z0.mul(&pref[j]).pow(r));
                    }
                }
                num.add_term(m, &one);
            }
            let mut den = vec![z0.clone()];
            for j in 1..=n {
                den.push(z0.mul(&pref[j]).pow(r));
            }
            Ok(RationalExpr::new(num, den))
        }
        IdentityId::WreathFlagRkMulti | IdentityId::BFlagMulti => {
            let mut num = Polynomial::zero();
            for colors in color_vectors {
                let a = color_steps(colors, r);
                let total: u32 = a.iter().sum();
                let ceil = total.div_ceil(r);
                let mut m = ExponentVector::from_pairs([(VarId::Z(0), ceil)]);
                for j in 1..=n {
                    if a[j - 1] > 0 {
                        m = m.mul(&pref[j].pow(a[j - 1]));
                    } else if des_set.contains(&j) {
                        m = m.mul(&z0).mul(&pref[j].pow(r));
                    }
                }
                num.add_term(m, &one);
            }
            let den = (0..=n).map(|j| z0.mul(&pref[j].pow(r))).collect();
            Ok(RationalExpr::new(num, den))
        }
        IdentityId::DNegMulti => {
            let mut des_m = ExponentVector::one();
            for &j in &des_set {
                des_m = des_m.mul(&z0).mul(&pref[j]);
            }
            let mut num = Polynomial::zero();
            for u in color_index {
                let negs = crate::statistics::neg_set(&u.inverse());
                let mut m = des_m.clone();
                for &j in &negs {
                    if j == 1 {
                        continue;
                    }
                    m = m.mul(&z0).mul(&pref[j - 1]);
                }
                num.add_term(m, &one);
            }
            let mut den = vec![z0.clone(), z0.mul(&pref[n])];
            for j in 1..n {
                den.push(z0.mul(&pref[j]).pow(2));
            }
            Ok(RationalExpr::new(num, den))
        }
        _ => unreachable!("not a permutation-indexed multivariate identity"),
    }
}

/// Color steps a_j = (c_j - c_{j+1}) mod r with c_{n+1} = 0, straight from a
/// color vector.
fn color_steps(colors: &[u32], r: u32) -> Vec<u32> {
    let n = colors.len();
    (0..n)
        .map(|j| {
            let next = if j + 1 < n { colors[j + 1] } else { 0 };
            (colors[j] + r - next) % r
        })
        .collect()
}

/// One signed permutation's rational term of the signed-cube identity:
/// monomials run over window suffixes, negative letters contribute
/// reciprocal variables, and the whole term carries s^neg.
fn signed_cube_term(g: &ColoredPermutation) -> Result<RationalExpr, PermError> {
    let n = g.spec().n;
    let w = g.window();
    // mono[j] = z0 * prod_{i > j} var(i), built from the right.
    let mut mono = vec![ExponentVector::var(VarId::Z(0), 1); n + 1];
    for j in (0..n).rev() {
        let (letter, color) = w[j];
        let v = if color == 1 {
            VarId::W(letter)
        } else {
            VarId::Z(letter)
        };
        mono[j] = mono[j + 1].mul(&ExponentVector::var(v, 1));
    }
    let nat_des = descent_set(g, OrderFlavor::Natural)?;
    let mut num_m = ExponentVector::from_pairs([(VarId::S, neg(g) as u32)]);
    for &j in &nat_des {
        num_m = num_m.mul(&mono[j]);
    }
    Ok(RationalExpr::new(
        Polynomial::monomial(num_m, BigInt::one()),
        mono,
    ))
}

/// A coefficient mismatch between the two sides.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of verifying one identity at one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub r: u32,
    pub n: usize,
    #[serde(rename = "K")]
    pub k: u32,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(rename = "firstMismatch", skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: u128,
}

/// Expand both sides to order K and compare coefficient by coefficient.
pub fn verify(
    id: IdentityId,
    r: u32,
    n: usize,
    k: u32,
    mode: ExecMode,
) -> Result<IdentityReport, IdentityError> {
    verify_perturbed(id, r, n, k, mode, Perturbation::None)
}

/// Like `verify`, with an optional uniform statistic perturbation applied to
/// the right-hand side (expected to produce a mismatch).
pub fn verify_perturbed(
    id: IdentityId,
    r: u32,
    n: usize,
    k: u32,
    mode: ExecMode,
    perturb: Perturbation,
) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let lhs = lhs_of(id, r, n, k)?;
    let rhs = rhs_series_perturbed(id, r, n, k, mode, perturb)?;
    let first = lhs.first_difference(&rhs);
    Ok(IdentityReport {
        id: id.to_string(),
        r,
        n,
        k,
        matched: first.is_none(),
        first_mismatch: first.map(|(m, a, b)| Mismatch {
            monomial: m.to_string(),
            lhs: a.to_string(),
            rhs: b.to_string(),
        }),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Joint statistic pairs whose distribution the CLI can print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatPair {
    NdesNmajor,
    FdesFmajor,
    DesFmajor,
    NatdesNatfmaj,
    StdesOnly,
    DesOnly,
    DndesDnmajor,
    DnatdesOnly,
}

impl StatPair {
    pub fn as_str(&self) -> &'static str {
        match self {
            StatPair::NdesNmajor => "ndes-nmajor",
            StatPair::FdesFmajor => "fdes-fmajor",
            StatPair::DesFmajor => "des-fmajor",
            StatPair::NatdesNatfmaj => "natdes-natfmaj",
            StatPair::StdesOnly => "stdes-only",
            StatPair::DesOnly => "des-only",
            StatPair::DndesDnmajor => "dndes-dnmajor",
            StatPair::DnatdesOnly => "dnatdes-only",
        }
    }

    pub const ALL: [StatPair; 8] = [
        StatPair::NdesNmajor,
        StatPair::FdesFmajor,
        StatPair::DesFmajor,
        StatPair::NatdesNatfmaj,
        StatPair::StdesOnly,
        StatPair::DesOnly,
        StatPair::DndesDnmajor,
        StatPair::DnatdesOnly,
    ];

    /// Does the pair range over the even-signed subgroup?
    pub fn over_d(&self) -> bool {
        matches!(self, StatPair::DndesDnmajor | StatPair::DnatdesOnly)
    }
}

impl FromStr for StatPair {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatPair::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

/// Joint distribution polynomial in t (and q) of a statistic pair over the
/// whole group (or the even-signed subgroup for the type-D pairs).
pub fn distribution(spec: GroupSpec, pair: StatPair) -> Result<Polynomial, IdentityError> {
    let required = spec.order();
    if required > BUDGET_CAP {
        return Err(IdentityError::Budget {
            required,
            cap: BUDGET_CAP,
        });
    }
    let elements = if pair.over_d() {
        enumerate_d(spec.n)
    } else {
        enumerate_group(spec)
    };
    let mut poly = Polynomial::zero();
    let one = BigInt::one();
    for g in &elements {
        let m = match pair {
            StatPair::NdesNmajor => tq(ndes(g), nmajor(g)),
            StatPair::FdesFmajor => tq(fdes(g), fmajor(g)),
            StatPair::DesFmajor => tq(des(g, OrderFlavor::Wreath)?, fmajor(g)),
            StatPair::NatdesNatfmaj => tq(des(g, OrderFlavor::Natural)?, natfmaj(g)?),
            StatPair::StdesOnly => tq(des(g, OrderFlavor::Steingrimsson)?, 0),
            StatPair::DesOnly => tq(des(g, OrderFlavor::Wreath)?, 0),
            StatPair::DndesDnmajor => tq(dndes(g)?, dnmajor(g)?),
            StatPair::DnatdesOnly => tq(des(g, OrderFlavor::NaturalD)?, 0),
        };
        poly.add_term(m, &one);
    }
    Ok(poly)
}

/// The decomposition equations tying flag statistics to descent structure;
/// all four must hold for every element. Returns the list of equation labels
/// that fail (empty = all good).
pub fn check_statistic_decompositions(g: &ColoredPermutation) -> Result<Vec<&'static str>, PermError> {
    let r = g.spec().r as usize;
    let a = color_changes(g);
    let des_set = plain_descents(&g.plain_part());
    let mut failures = Vec::new();

    let sum_a: usize = a.iter().map(|&x| x as usize).sum();
    let weighted_a: usize = a.iter().enumerate().map(|(i, &x)| (i + 1) * x as usize).sum();
    let zero_descents: Vec<usize> = des_set
        .iter()
        .copied()
        .filter(|&j| a[j - 1] == 0)
        .collect();

    // fdes = r * |{j in Des(pi) : a_j = 0}| + sum_j a_j
    if fdes(g) != r * zero_descents.len() + sum_a {
        failures.push("fdes-decomposition");
    }
    // fmajor = r * sum_{j in Des(pi), a_j = 0} j + sum_j j a_j
    if fmajor(g) != r * zero_descents.iter().sum::<usize>() + weighted_a {
        failures.push("fmajor-decomposition");
    }
    // des = ceil(ch / r) + |{j in Des(pi) : a_j = 0}|
    let ceil_ch = ch(g).div_ceil(r);
    if des(g, OrderFlavor::Wreath)? != ceil_ch + zero_descents.len() {
        failures.push("des-decomposition");
    }
    // sum_j j a_j = col + r * sum over color-change descent positions
    let cc_sum: usize = crate::statistics::color_change_descent_positions(g)
        .iter()
        .sum();
    if weighted_a != crate::statistics::col(g) + r * cc_sum {
        failures.push("weighted-step-decomposition");
    }
    Ok(failures)
}
