//! Worked-example golden tests: every concrete value the library is
//! specified to reproduce, frozen as exact assertions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use emstats::bijections::{alpha_to_beta, decode_beta, encode_alpha, neg_flag_bijection};
use emstats::colored_perm::{
    enumerate_group, enumerate_increasing, ColoredPermutation, GroupSpec,
};
use emstats::polyhedral::{
    cone_from_generators, cone_over, locate, scaling_all_one, simplex_for, triangulate_cube,
    triangulate_signed_cube, HalfOpenSimplex, ShiftMethod,
};
use emstats::series::{ExponentVector, Polynomial, VarId};
use emstats::statistics::{
    ch, classical_descents, classical_maj, classify_descents, col, color_change_descent_positions,
    color_changes, des, descent_set, dndes, dndes_multiset, dnmajor, fdes, fmajor, natfmaj, ndes,
    ndes_multiset, neg_set, nmajor, nneg_multiset, type_a_descents, type_a_major, DescentCause,
    OrderFlavor,
};

fn parse(r: u32, n: usize, text: &str) -> ColoredPermutation {
    ColoredPermutation::parse_window(text, GroupSpec::new(r, n).unwrap()).unwrap()
}

fn set(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}

#[test]
fn parse_window_goldens() {
    let g = parse(2, 4, "[4^1 1 2^1 3^1]");
    assert_eq!(g.window(), &[(4, 1), (1, 0), (2, 1), (3, 1)]);
    // `-j` alias for j^1 when r = 2.
    assert_eq!(parse(2, 4, "[-4 1 -2 -3]"), g);
    let id3 = parse(3, 3, "[1 2 3]");
    assert!(id3.is_identity());
    let w = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    let colors: Vec<u32> = w.window().iter().map(|&(_, c)| c).collect();
    assert_eq!(colors, vec![3, 0, 1, 0, 2, 1]);
}

#[test]
fn compose_and_inverse_goldens() {
    let g = parse(2, 4, "[4^1 1 2^1 3^1]");
    let h = parse(2, 4, "[3 1^1 4^1 2]");
    assert_eq!(g.compose(&h).unwrap(), parse(2, 4, "[2^1 4 3 1]"));
    assert_eq!(g.inverse(), parse(2, 4, "[2 3^1 4^1 1^1]"));
    assert_eq!(
        parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]").inverse(),
        parse(4, 6, "[1^1 3^3 4^0 2^0 6^3 5^2]")
    );
    let e = ColoredPermutation::identity(g.spec());
    assert_eq!(g.compose(&e).unwrap(), g);
    assert_eq!(g.compose(&g.inverse()).unwrap(), e);
    assert_eq!(e.inverse(), e);
}

#[test]
fn factorization_goldens() {
    let g = parse(2, 6, "[4^1 1^1 5 3^1 6 2]");
    let f = g.decompose();
    assert_eq!(f.increasing, parse(2, 6, "[1^1 3^1 4^1 2 5 6]"));
    assert_eq!(f.plain.plain_part(), vec![3, 1, 5, 2, 6, 4]);
    assert_eq!(f.increasing.compose(&f.plain).unwrap(), g);

    let w = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    assert_eq!(w.decompose().plain.plain_part(), vec![1, 6, 3, 5, 2, 4]);

    let e = ColoredPermutation::identity(GroupSpec::new(3, 3).unwrap());
    let fe = e.decompose();
    assert!(fe.increasing.is_identity() && fe.plain.is_identity());
}

#[test]
fn enumeration_goldens() {
    assert_eq!(enumerate_group(GroupSpec::new(2, 2).unwrap()).len(), 8);
    assert_eq!(enumerate_group(GroupSpec::new(1, 3).unwrap()).len(), 6);
    assert_eq!(GroupSpec::new(4, 6).unwrap().order(), 2_949_120);

    let i22 = enumerate_increasing(GroupSpec::new(2, 2).unwrap(), OrderFlavor::Wreath, false)
        .unwrap();
    assert_eq!(i22.len(), 4);
    let i26 = enumerate_increasing(GroupSpec::new(2, 6).unwrap(), OrderFlavor::Wreath, false)
        .unwrap();
    assert!(i26.contains(&parse(2, 6, "[1^1 3^1 4^1 2 5 6]")));
    let istar =
        enumerate_increasing(GroupSpec::new(2, 3).unwrap(), OrderFlavor::Wreath, true).unwrap();
    assert_eq!(istar.len(), 4);
}

#[test]
fn d_membership_and_reversal_goldens() {
    let g = parse(2, 5, "[2^1 4^1 5^0 1^1 3^1]");
    assert!(g.is_in_d().unwrap());
    assert!(ColoredPermutation::identity(g.spec()).is_in_d().unwrap());
    assert!(!parse(2, 3, "[1^1 2 3]").is_in_d().unwrap());

    assert_eq!(
        g.reverse_negative_entries().unwrap(),
        parse(2, 5, "[3^1 1^1 5^0 4^1 2^1]")
    );
    let plain = parse(2, 3, "[2 3 1]");
    assert_eq!(plain.reverse_negative_entries().unwrap(), plain);
    for h in enumerate_group(GroupSpec::new(2, 3).unwrap()) {
        let once = h.reverse_negative_entries().unwrap();
        assert_eq!(once.reverse_negative_entries().unwrap(), h);
    }
}

#[test]
fn classical_statistics_goldens() {
    let spec = GroupSpec::new(1, 6).unwrap();
    let p = ColoredPermutation::from_plain(spec, &[1, 6, 3, 5, 2, 4]).unwrap();
    assert_eq!(classical_descents(&p).unwrap(), set(&[2, 4]));
    assert_eq!(classical_maj(&p).unwrap(), 6);

    let id = ColoredPermutation::identity(GroupSpec::new(1, 4).unwrap());
    assert_eq!(classical_maj(&id).unwrap(), 0);
    let rev = ColoredPermutation::from_plain(GroupSpec::new(1, 4).unwrap(), &[4, 3, 2, 1]).unwrap();
    assert_eq!(classical_descents(&rev).unwrap(), set(&[1, 2, 3]));
    assert_eq!(classical_maj(&rev).unwrap(), 6);
}

#[test]
fn letter_order_chains() {
    use emstats::statistics::compare_letters;
    use std::cmp::Ordering;
    // Wreath, r = 3: 1^2 < 2^2 < 3^2 < 1^1 < 2^1 < 3^1 < 1^0 < 2^0 < 3^0.
    let wreath_chain = [
        (1, 2), (2, 2), (3, 2), (1, 1), (2, 1), (3, 1), (1, 0), (2, 0), (3, 0),
    ];
    for pair in wreath_chain.windows(2) {
        assert_eq!(
            compare_letters(pair[0], pair[1], OrderFlavor::Wreath),
            Ordering::Less
        );
    }
    // Steingrimsson, r = 3: 1^0 < 2^0 < 3^0 < 1^1 < ... < 3^2.
    let st_chain = [
        (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2),
    ];
    for pair in st_chain.windows(2) {
        assert_eq!(
            compare_letters(pair[0], pair[1], OrderFlavor::Steingrimsson),
            Ordering::Less
        );
    }
    assert_eq!(
        compare_letters((2, 1), (2, 1), OrderFlavor::Wreath),
        Ordering::Equal
    );
}

#[test]
fn descent_set_goldens() {
    assert_eq!(
        descent_set(&parse(3, 3, "[3^2 2^0 1^1]"), OrderFlavor::Wreath).unwrap(),
        set(&[0, 2])
    );
    assert_eq!(
        descent_set(&parse(3, 3, "[2^2 3^2 1^1]"), OrderFlavor::Steingrimsson).unwrap(),
        set(&[2, 3])
    );
    assert_eq!(
        descent_set(&parse(2, 4, "[3^1 2 1^1 4^1]"), OrderFlavor::Natural).unwrap(),
        set(&[0, 2, 3])
    );
}

#[test]
fn type_a_and_negative_statistics_goldens() {
    let g = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    assert_eq!(
        type_a_descents(&g, OrderFlavor::Wreath).unwrap(),
        set(&[2, 4])
    );
    assert_eq!(type_a_major(&g, OrderFlavor::Wreath).unwrap(), 6);
    assert_eq!(neg_set(&g), set(&[1, 3, 5, 6]));
    assert_eq!(col(&g), 7);

    let nn = nneg_multiset(&g.inverse());
    assert_eq!(nn.elements(), vec![1, 2, 2, 2, 5, 5, 5, 6, 6]);
    assert_eq!(nn.multiplicity(5), 3);

    let nd = ndes_multiset(&g);
    assert_eq!(nd.elements(), vec![1, 2, 2, 2, 2, 4, 5, 5, 5, 6, 6]);
    assert_eq!(ndes(&g), 11);
    assert_eq!(nmajor(&g), 40);

    let d5 = parse(2, 5, "[2^1 4^1 5^0 1^1 3^1]");
    assert_eq!(
        type_a_descents(&d5, OrderFlavor::NaturalD).unwrap(),
        set(&[3])
    );
}

#[test]
fn color_change_goldens() {
    let g = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    assert_eq!(color_changes(&g), vec![3, 3, 1, 2, 1, 1]);
    assert_eq!(ch(&g), 11);

    // Colors (4,1,2,3,0,1,1,3,1) with r = 5 on an identity underlying
    // permutation: the color-change vector depends only on the colors.
    let window: Vec<(usize, u32)> = [4u32, 1, 2, 3, 0, 1, 1, 3, 1]
        .iter()
        .enumerate()
        .map(|(i, &c)| (i + 1, c))
        .collect();
    let h = ColoredPermutation::new(GroupSpec::new(5, 9).unwrap(), window).unwrap();
    assert_eq!(color_changes(&h), vec![3, 4, 4, 3, 4, 0, 3, 2, 1]);
    assert_eq!(color_change_descent_positions(&h), vec![7, 5, 3, 2]);

    let id = ColoredPermutation::identity(GroupSpec::new(4, 3).unwrap());
    assert_eq!(color_changes(&id), vec![0, 0, 0]);
    assert_eq!(ch(&id), 0);
}

#[test]
fn flag_statistics_goldens() {
    let g = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    assert_eq!(fdes(&g), 11);
    assert_eq!(fmajor(&g), 31);

    let h = parse(4, 6, "[1^1 2^3 5^0 3^0 4^1 6^0]");
    assert_eq!(fdes(&h), 13);
    assert_eq!(fmajor(&h), 37);

    let id = ColoredPermutation::identity(g.spec());
    assert_eq!((fdes(&id), fmajor(&id)), (0, 0));
}

#[test]
fn natural_flag_goldens() {
    let a = parse(2, 5, "[3^1 1^1 5^0 4^1 2^1]");
    assert_eq!(des(&a, OrderFlavor::Natural).unwrap(), 2);
    assert_eq!(natfmaj(&a).unwrap(), 10);

    let b = parse(2, 5, "[2^1 4^1 5^0 1^1 3^1]");
    assert_eq!(des(&b, OrderFlavor::Wreath).unwrap(), 2);
    assert_eq!(fmajor(&b), 10);

    let id = ColoredPermutation::identity(GroupSpec::new(2, 3).unwrap());
    assert_eq!(natfmaj(&id).unwrap(), 0);
}

#[test]
fn type_d_statistics_goldens() {
    let g = parse(2, 5, "[2^1 4^1 5^0 1^1 3^1]");
    assert_eq!(dndes_multiset(&g).unwrap().elements(), vec![1, 2, 3, 3]);
    assert_eq!(dndes(&g).unwrap(), 4);
    assert_eq!(dnmajor(&g).unwrap(), 9);

    let id = ColoredPermutation::identity(GroupSpec::new(2, 3).unwrap());
    assert_eq!(dndes(&id).unwrap(), 0);
    assert_eq!(dnmajor(&id).unwrap(), 0);
}

#[test]
fn descent_cause_goldens() {
    let g = parse(4, 6, "[1^1 2^3 5^0 3^0 4^1 6^0]");
    let causes = classify_descents(&g);
    let at = |cause: DescentCause| -> Vec<usize> {
        causes
            .iter()
            .enumerate()
            .filter(|&(_, c)| *c == cause)
            .map(|(j, _)| j)
            .collect()
    };
    assert_eq!(at(DescentCause::ColorChange), vec![1, 4]);
    assert_eq!(at(DescentCause::Standard), vec![3]);
    assert_eq!(at(DescentCause::Zero), vec![0]);
    let in_descent_set: Vec<usize> = descent_set(&g, OrderFlavor::Wreath)
        .unwrap()
        .into_iter()
        .collect();
    assert_eq!(at(DescentCause::None).len(), 6 - in_descent_set.len());

    let id = ColoredPermutation::identity(GroupSpec::new(3, 4).unwrap());
    assert!(classify_descents(&id)
        .iter()
        .all(|c| *c == DescentCause::None));
}

#[test]
fn partial_sum_rule_instance() {
    // With colors (4,1,2,3,0,1,1,3,1), r = 5: the tail sum of color changes
    // from position 4 is 13 = c_4 + 5 * (two color-change descents at >= 4).
    let window: Vec<(usize, u32)> = [4u32, 1, 2, 3, 0, 1, 1, 3, 1]
        .iter()
        .enumerate()
        .map(|(i, &c)| (i + 1, c))
        .collect();
    let g = ColoredPermutation::new(GroupSpec::new(5, 9).unwrap(), window).unwrap();
    let a = color_changes(&g);
    let tail: u32 = a[3..].iter().sum();
    assert_eq!(tail, 13);
    let cc_tail = color_change_descent_positions(&g)
        .iter()
        .filter(|&&j| j >= 4)
        .count();
    assert_eq!(tail as usize, 3 + 5 * cc_tail);
    assert_eq!(cc_tail, 2);
}

#[test]
fn bijection_goldens() {
    let g = parse(4, 6, "[1^3 4^0 2^1 3^0 6^2 5^1]");
    let a = encode_alpha(&g);
    assert_eq!(a.plain, vec![1, 6, 3, 5, 2, 4]);
    assert_eq!(a.alpha, vec![1, 3, 0, 0, 3, 2]);

    let b = alpha_to_beta(&a);
    assert_eq!(b.beta, vec![1, 0, 0, 1, 3, 2]);

    let image = decode_beta(&b).unwrap();
    assert_eq!(image, parse(4, 6, "[1^3 6^2 3^2 5^2 2^1 4^2]"));
    assert_eq!((ndes(&g), nmajor(&g)), (11, 40));
    assert_eq!((fdes(&image), fmajor(&image)), (11, 40));
    assert_eq!(neg_flag_bijection(&g).unwrap(), image);

    let id = ColoredPermutation::identity(GroupSpec::new(3, 3).unwrap());
    assert_eq!(neg_flag_bijection(&id).unwrap(), id);
}

fn rational_point(numerators: &[i64], denominator: i64) -> Vec<BigRational> {
    numerators
        .iter()
        .map(|&p| BigRational::new(BigInt::from(p), BigInt::from(denominator)))
        .collect()
}

#[test]
fn locate_goldens() {
    let x = rational_point(&[2, 1, 2, 3, 1, 1, 3, 3, 2], 10);
    assert_eq!(locate(&x, 9, 1).unwrap().perm, vec![4, 7, 8, 1, 3, 9, 2, 5, 6]);

    let zero = rational_point(&[0, 0, 0], 1);
    assert_eq!(locate(&zero, 3, 1).unwrap().perm, vec![1, 2, 3]);

    // (1/2, 1/2) lies only in the simplex of the identity permutation.
    let mid = rational_point(&[1, 1], 2);
    let containing: Vec<Vec<usize>> = triangulate_cube(2, 1)
        .iter()
        .filter(|s| s.contains(&mid).unwrap())
        .map(|s| s.perm.clone())
        .collect();
    assert_eq!(containing, vec![vec![1, 2]]);
}

#[test]
fn cube_triangulation_covers_lattice_points() {
    let simplices = triangulate_cube(3, 2);
    assert_eq!(simplices.len(), 6);
    for x1 in 0..=2i64 {
        for x2 in 0..=2i64 {
            for x3 in 0..=2i64 {
                let hits = simplices
                    .iter()
                    .filter(|s| s.contains_lattice(&[x1, x2, x3], 1))
                    .count();
                assert_eq!(hits, 1, "point ({x1},{x2},{x3})");
            }
        }
    }
}

#[test]
fn signed_triangulation_goldens() {
    let simplices = triangulate_signed_cube(3);
    assert_eq!(simplices.len(), 48);

    // Every lattice point of {-1,0,1}^3 is covered exactly once.
    for x1 in -1..=1i64 {
        for x2 in -1..=1i64 {
            for x3 in -1..=1i64 {
                let hits = simplices
                    .iter()
                    .filter(|s| s.contains_lattice(&[x1, x2, x3], 1))
                    .count();
                assert_eq!(hits, 1, "point ({x1},{x2},{x3})");
            }
        }
    }

    // The origin lies only in the identity's simplex.
    let origin_owner: Vec<&HalfOpenSimplex> = simplices
        .iter()
        .filter(|s| s.contains_lattice(&[0, 0, 0], 1))
        .collect();
    assert_eq!(origin_owner.len(), 1);
    assert_eq!(origin_owner[0].perm, vec![1, 2, 3]);
    assert_eq!(origin_owner[0].signs.as_deref(), Some(&[1, 1, 1][..]));

    // The six simplices subdividing the box with letters 1, 2 negative and
    // 3 positive carry exactly the published inequality systems.
    let expected = [
        (vec![2, 1, 3], "0 < -x2 <= -x1 <= x3 <= 1"),
        (vec![1, 2, 3], "0 < -x1 < -x2 <= x3 <= 1"),
        (vec![2, 3, 1], "0 < -x2 <= x3 < -x1 <= 1"),
        (vec![3, 1, 2], "0 <= x3 < -x1 < -x2 <= 1"),
        (vec![1, 3, 2], "0 < -x1 <= x3 < -x2 <= 1"),
        (vec![3, 2, 1], "0 <= x3 < -x2 <= -x1 <= 1"),
    ];
    let box_cells: Vec<&HalfOpenSimplex> = simplices
        .iter()
        .filter(|s| {
            let eps = s.signs.as_ref().unwrap();
            let sign_of = |letter: usize| eps[s.perm.iter().position(|&p| p == letter).unwrap()];
            sign_of(1) == -1 && sign_of(2) == -1 && sign_of(3) == 1
        })
        .collect();
    assert_eq!(box_cells.len(), 6);
    for (perm, text) in &expected {
        let cell = box_cells
            .iter()
            .find(|s| &s.perm == perm)
            .unwrap_or_else(|| panic!("missing simplex for {perm:?}"));
        assert_eq!(&cell.inequality_text(), text);
    }
}

fn point_set(points: Vec<Vec<i64>>) -> BTreeSet<Vec<i64>> {
    points.into_iter().collect()
}

#[test]
fn parallelepiped_shifting_example() {
    // Half-open cone 0 <= x3 < x2 < x1 with generators 2v1, 2v2, 3v3.
    let base = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]];
    let open = vec![true, true, false];
    let cone = cone_from_generators(base.clone(), &[2, 2, 3], open).unwrap();
    assert_eq!(cone.det_abs(), 12);

    let off = point_set(cone.fpp_points(ShiftMethod::ShiftOffBoundary).unwrap());
    let whole = point_set(cone.fpp_points(ShiftMethod::ShiftWhole).unwrap());
    assert_eq!(off, whole);
    assert_eq!(off.len(), 12);

    // Closed variant of the same parallelepiped.
    let closed_cone =
        cone_from_generators(base, &[2, 2, 3], vec![false, false, false]).unwrap();
    let closed = point_set(closed_cone.fpp_points(ShiftMethod::ShiftWhole).unwrap());
    assert_eq!(closed.len(), 12);

    let stay: BTreeSet<Vec<i64>> = off.intersection(&closed).cloned().collect();
    assert_eq!(
        stay,
        point_set(vec![vec![2, 1, 0], vec![3, 2, 1], vec![4, 3, 2]])
    );
    let moved: BTreeSet<Vec<i64>> = off.difference(&closed).cloned().collect();
    assert_eq!(
        moved,
        point_set(vec![
            vec![4, 2, 0],
            vec![5, 3, 1],
            vec![6, 4, 2],
            vec![3, 1, 0],
            vec![3, 2, 0],
            vec![4, 3, 1],
            vec![5, 3, 2],
            vec![5, 4, 2],
            vec![4, 2, 1],
        ])
    );
}

#[test]
fn unimodular_cone_goldens() {
    // Closed unimodular cone: the origin is the only parallelepiped point.
    let closed = cone_over(&simplex_for(&[1, 2], 1), &scaling_all_one(2)).unwrap();
    assert_eq!(closed.det_abs(), 1);
    assert_eq!(
        closed.fpp_points(ShiftMethod::ShiftWhole).unwrap(),
        vec![vec![0, 0, 0]]
    );

    // Half-open unimodular cone over Delta_I with I = {1}, n = 2:
    // numerator z0 z1, denominator (1-z0)(1-z0z1)(1-z0z1z2).
    let half_open = HalfOpenSimplex {
        perm: vec![1, 2],
        strict: set(&[1]),
        scale: 1,
        signs: None,
    };
    let cone = cone_over(&half_open, &scaling_all_one(2)).unwrap();
    let sigma = cone.sigma_rational();
    let z = |vars: &[usize]| {
        ExponentVector::from_pairs(vars.iter().map(|&i| {
            (
                if i == 0 { VarId::Z(0) } else { VarId::Z(i) },
                1u32,
            )
        }))
    };
    assert_eq!(
        sigma.numerator,
        Polynomial::monomial(z(&[0, 1]), BigInt::one())
    );
    assert_eq!(sigma.denominator, vec![z(&[0]), z(&[0, 1]), z(&[0, 1, 2])]);
}
