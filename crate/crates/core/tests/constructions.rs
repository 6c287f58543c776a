use equiangular::constructions::vectors::{self, c, c1, c2, dot, e1_minus_e2, e1_minus_e3, u1, u2};
use equiangular::constructions::{
    asche_72, asche_family, asche_indices, filter_orthogonal, generate_octads, table_octads,
    taylor_90, taylor_family, tremain_28, OctadFamily,
};
use equiangular::linalg::rat;
use equiangular::lineset::relative_bound_floor;

#[test]
fn octad_design() {
    let design = generate_octads();
    assert_eq!(design.len(), 759);
    assert_eq!(design.octads()[0].points(), [1, 2, 3, 4, 5, 6, 7, 8]);
    for p in 1..=24 {
        assert_eq!(design.blocks_through(p), 253, "point {p}");
    }
    for a in 1..=24u8 {
        for b in a + 1..=24 {
            assert_eq!(design.blocks_through_pair(a, b), 77);
        }
    }
    assert_eq!(design.intersection_sizes(), vec![0, 2, 4]);
}

/// The 28 columns in floating point, straight from the circle, bullet and star row lists
/// (independent of the column descriptors used by the construction).
fn tremain_float_columns() -> Vec<[f64; 14]> {
    let circles: [[usize; 6]; 7] = [
        [1, 2, 17, 20, 25, 27],
        [1, 3, 5, 6, 21, 24],
        [5, 7, 9, 10, 25, 28],
        [1, 4, 9, 11, 13, 14],
        [5, 8, 13, 15, 17, 18],
        [9, 12, 17, 19, 21, 22],
        [13, 16, 21, 23, 25, 26],
    ];
    let bullets: [[usize; 6]; 7] = [
        [3, 4, 18, 19, 26, 28],
        [2, 4, 7, 8, 22, 23],
        [6, 8, 11, 12, 26, 27],
        [2, 3, 10, 12, 15, 16],
        [6, 7, 14, 16, 19, 20],
        [10, 11, 18, 20, 23, 24],
        [14, 15, 22, 24, 27, 28],
    ];
    let mut cols = vec![[0.0f64; 14]; 28];
    let s = (0.2f64).sqrt();
    for (row, cs) in circles.iter().enumerate() {
        for &c in cs {
            cols[c - 1][row] = s;
        }
    }
    for (row, cs) in bullets.iter().enumerate() {
        for &c in cs {
            cols[c - 1][row] = -s;
        }
    }
    // star at tikz (28 - 4x - y - 0.5, x + 0.5): column 28-4x-y, row 14-x
    for x in 0..7 {
        for y in 0..4 {
            cols[28 - 4 * x - y - 1][13 - x] = (0.4f64).sqrt();
        }
    }
    cols
}

#[test]
fn tremain_matches_float_oracle() {
    let ls = tremain_28();
    assert_eq!((ls.n(), ls.rank()), (28, 14));
    assert_eq!(ls.angle(), &rat(1, 5));
    assert!(ls.validate().passed);
    let cols = tremain_float_columns();
    for i in 0..28 {
        for j in 0..28 {
            let f: f64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum();
            let exact = ls.gram().get(i, j);
            let e = num_traits::ToPrimitive::to_f64(exact).unwrap();
            assert!((f - e).abs() < 1e-12, "({i}, {j}): {f} vs {exact}");
            if i != j {
                assert!((f.abs() - 0.2).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn taylor_matches_table() {
    let fam = taylor_family().unwrap();
    assert_eq!(fam.octads, table_octads());
    assert_eq!(fam.octads[0].points(), [1, 3, 4, 5, 9, 15, 18, 24]);
    let ls = taylor_90().unwrap();
    assert_eq!((ls.n(), ls.rank()), (90, 20));
    assert!(ls.validate().passed);
    assert!(ls.n() as u64 <= relative_bound_floor(ls.rank(), ls.angle()).unwrap());
    assert_eq!(relative_bound_floor(20, &rat(1, 5)).unwrap(), 96);
    for v in &fam.vectors {
        assert_eq!(dot(v, v), 80);
        for u in [e1_minus_e2(), c(), c1(), c2()] {
            assert_eq!(dot(v, &u), 0);
        }
    }
}

#[test]
fn asche_is_the_taylor_restriction() {
    let taylor = taylor_family().unwrap();
    let keep = asche_indices(&taylor);
    assert_eq!(keep.len(), 72);
    assert_eq!(keep, (18..90).collect::<Vec<_>>());
    let ls = asche_72().unwrap();
    assert_eq!((ls.n(), ls.rank()), (72, 19));
    assert!(ls.validate().passed);
    let big = taylor_90().unwrap();
    assert_eq!(ls.gram(), &big.gram().principal_submatrix(&keep));
    assert_eq!(&big.subset(&keep).unwrap(), &ls);
    assert!(asche_family().unwrap().vectors.iter().all(|v| dot(v, &e1_minus_e3()) == 0));
    assert_eq!(relative_bound_floor(19, &rat(1, 5)).unwrap(), 76);
}

#[test]
fn filter_reproduces_taylor_from_all_octads_through_one() {
    let fam = equiangular::constructions::octads_through_one();
    assert_eq!(fam.len(), 253);
    let ls = filter_orthogonal(&fam, &[e1_minus_e2(), c(), c1(), c2()]).unwrap().lineset();
    assert_eq!((ls.n(), ls.rank()), (90, 20));
}

#[test]
fn u_vectors_each_cut_out_56_lines_of_rank_18() {
    let asche = asche_family().unwrap();
    for u in [u1(), u2()] {
        let ls = filter_orthogonal(&asche, &[u]).unwrap().lineset();
        assert_eq!((ls.n(), ls.rank()), (56, 18));
        assert!(ls.validate().passed);
        let report = equiangular::saturation::check_saturated(&ls, None).unwrap();
        assert!(report.saturated, "N = {}", report.upper_bound);
    }
}

#[test]
fn octad_family_vectors() {
    let fam = OctadFamily::from_octads(table_octads());
    assert_eq!(fam.vectors[0], vectors::octad_vector(fam.octads[0]));
}
