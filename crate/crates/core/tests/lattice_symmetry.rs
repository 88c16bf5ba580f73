use std::f64::consts::PI;

use origami_core::construction::{generate, is_lattice_point, lattice_basis, AngleSet};
use origami_core::geometry::{reflect, rotate};
use origami_core::numeric::normalize_angle;
use origami_core::symmetry::{
    classify, classify_wallpaper, point_in_m, reflection_axes_3, Membership, PointGroup,
    WallpaperClass,
};
use origami_core::{Angle, Point, Tolerance};

fn rp(n: i64, d: i64) -> Angle {
    Angle::rational_pi(n, d).unwrap()
}

fn set(v: &[Angle]) -> AngleSet {
    AngleSet::new(v.iter().copied(), &Tolerance::default()).unwrap()
}

/// Every claimed axis maps depth-3 points of the structure back into the lattice.
#[test]
fn claimed_axes_preserve_lattice() {
    let tol = Tolerance::default();
    let sets = [
        set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]),
        set(&[Angle::ZERO, rp(1, 3), rp(2, 3)]),
        set(&[Angle::ZERO, rp(2, 5), rp(4, 5)]),
        set(&[Angle::ZERO, rp(1, 2), rp(3, 4)]),
        set(&[
            Angle::ZERO,
            normalize_angle(0.7).unwrap(),
            normalize_angle(1.4).unwrap(),
        ]),
    ];
    for u in sets {
        let basis = lattice_basis(&u, &tol).unwrap();
        let snap = generate(&u, 3, None, None, &tol).unwrap();
        let axes = reflection_axes_3(&u, &tol).unwrap();
        assert!(!axes.is_empty(), "{u:?}");
        for axis in axes {
            for p in snap.points() {
                let q = reflect(p.point(), axis.radians());
                assert!(is_lattice_point(q, &basis, 1e-9), "{u:?} axis {axis}: {q}");
            }
        }
    }
}

#[test]
fn generic_triangle_has_only_half_turn() {
    let tol = Tolerance::default();
    let u = set(&[Angle::ZERO, rp(1, 5), rp(3, 7)]);
    assert_eq!(classify_wallpaper(&u, &tol).unwrap(), WallpaperClass::P2);
    assert!(reflection_axes_3(&u, &tol).unwrap().is_empty());
    let basis = lattice_basis(&u, &tol).unwrap();
    let snap = generate(&u, 3, None, None, &tol).unwrap();
    for p in snap.points() {
        let q = rotate(p.point(), PI, Point::ZERO);
        assert!(is_lattice_point(q, &basis, 1e-9));
    }
    // the reflection across the real axis does not fix τ's lattice
    let q = reflect(basis.tau, 0.0);
    assert!(!is_lattice_point(q, &basis, 1e-9));
}

#[test]
fn membership_in_lattice_sets() {
    let tol = Tolerance::default();
    let u = set(&[Angle::ZERO, rp(1, 3), rp(2, 3)]);
    let tau = lattice_basis(&u, &tol).unwrap().tau;
    let p = tau * 2.0 + Point::new(-3.0, 0.0);
    assert!(point_in_m(p, &u, 3, &tol).unwrap().is_member());
    assert_eq!(
        point_in_m(Point::new(0.5, 0.0), &u, 3, &tol).unwrap(),
        Membership::NotMember
    );
}

#[test]
fn classify_three_angles_reports_both_views() {
    let tol = Tolerance::default();
    let c = classify(&set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]), 3, &tol).unwrap();
    assert_eq!(c.class_name(), "cmm");
    assert_eq!(c.point_group, PointGroup::KleinFour);
    assert_eq!(c.reflection_axes.len(), 2);
}
