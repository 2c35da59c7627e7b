//! Properties of whole complexes, drawn over random small parameters.

use std::collections::BTreeSet;

use farey_core::arrangement::build;
use farey_core::cpd::validate;
use farey_core::exact_geom::{Pt, Rat};
use farey_core::farey_lines::{enumerate, FareyParams, RectWindow};
use farey_core::verifier::{harvest_three_point_triples, three_point_line, verify_all};
use proptest::prelude::*;

fn cell_set(m: i64, n: i64) -> BTreeSet<Vec<Pt>> {
    let cu = RectWindow::unit_square();
    let sub = build(&enumerate(FareyParams::new(m, n).unwrap(), &cu), &cu);
    sub.cells.iter().map(|c| c.boundary.vertices().to_vec()).collect()
}

/// Applies a point map to every cell, restoring counterclockwise order and
/// the canonical starting vertex.
fn mapped(cells: &BTreeSet<Vec<Pt>>, f: impl Fn(&Pt) -> Pt, reverses: bool) -> BTreeSet<Vec<Pt>> {
    cells
        .iter()
        .map(|c| {
            let mut v: Vec<Pt> = c.iter().map(&f).collect();
            if reverses {
                v.reverse();
            }
            validate(v).unwrap().canonical().vertices().to_vec()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reflections_permute_cells(m in 1i64..=4, n in 1i64..=4) {
        let cells = cell_set(m, n);
        let one = Rat::one();
        prop_assert_eq!(&mapped(&cells, |p| Pt::new(p.x.clone(), &one - &p.y), true), &cells);
        prop_assert_eq!(&mapped(&cells, |p| Pt::new(&one - &p.x, p.y.clone()), true), &cells);
    }

    #[test]
    fn swapping_axes_swaps_parameters(m in 1i64..=4, n in 1i64..=4) {
        let swapped = mapped(&cell_set(n, m), |p| Pt::new(p.y.clone(), p.x.clone()), true);
        prop_assert_eq!(swapped, cell_set(m, n));
        let a = verify_all(FareyParams::new(m, n).unwrap());
        let b = verify_all(FareyParams::new(n, m).unwrap());
        prop_assert_eq!((a.triangle_count, a.quad_count), (b.triangle_count, b.quad_count));
    }

    #[test]
    fn sampled_three_point_triples(m in 1i64..=4, n in 1i64..=4, pick in any::<prop::sample::Index>()) {
        let cu = RectWindow::unit_square();
        let p = FareyParams::new(m, n).unwrap();
        let sub = build(&enumerate(p, &cu), &cu);
        let triples = harvest_three_point_triples(&sub, p);
        prop_assume!(!triples.is_empty());
        let (a, b, c) = &triples[pick.index(triples.len())];
        let phi = three_point_line(a, b, c, p).unwrap();
        prop_assert!(phi.in_family(p, &cu));
        prop_assert!(phi.eval(b).is_zero());
        prop_assert_eq!(phi.eval(a).signum() * phi.eval(c).signum(), -1);
    }
}

#[test]
fn verify_2_2_is_clean_and_symmetric() {
    let r = verify_all(FareyParams::new(2, 2).unwrap());
    assert!(r.passed(), "{:?}", r.violations);
    assert_eq!((r.cell_count, r.triangle_count, r.quad_count), (56, 48, 8));
    assert!(r.denominator_claim_exceptions.is_empty());
}
