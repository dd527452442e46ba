use dncube::detect::is_coplanar;
use dncube::hj::{decode4, encode4, Alphabet, HJPoint};
use dncube::line::{grid_of, line_of, line_points};
use dncube::plane::HilbertCube;
use dncube::point::DiagPoint;
use dncube::word::BitWord;
use proptest::prelude::*;

fn word(n: u8) -> impl Strategy<Value = BitWord> {
    (0u64..(1 << n)).prop_map(move |v| BitWord::new(n, v).unwrap())
}

proptest! {
    #[test]
    fn codec_roundtrip(digits in proptest::collection::vec(0u8..4, 1..=6)) {
        let p = HJPoint::new(Alphabet::Four, digits).unwrap();
        let d = encode4(&p).unwrap();
        prop_assert_eq!(decode4(&d), p);
    }

    #[test]
    fn index_roundtrip(digits in proptest::collection::vec(0u8..3, 1..=6)) {
        let p = HJPoint::new(Alphabet::Three, digits.clone()).unwrap();
        let q = HJPoint::from_index(Alphabet::Three, digits.len(), p.index()).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn coplanarity_ignores_argument_order(
        vs in proptest::collection::hash_set(0u64..16, 4),
        perm in (0usize..24)
    ) {
        let vs: Vec<BitWord> = vs.iter().map(|&v| BitWord::new(4, v).unwrap()).collect();
        let mut order = [0usize, 1, 2, 3];
        // unrank a permutation of 4 elements
        let mut rest: Vec<usize> = order.to_vec();
        let mut code = perm;
        for slot in order.iter_mut() {
            let pick = code % rest.len();
            code /= 4;
            *slot = rest.remove(pick);
        }
        let base = is_coplanar(vs[0], vs[1], vs[2], vs[3]).unwrap();
        let permuted =
            is_coplanar(vs[order[0]], vs[order[1]], vs[order[2]], vs[order[3]]).unwrap();
        prop_assert_eq!(base, permuted);
    }

    #[test]
    fn every_nondegenerate_point_sits_on_its_line(x in word(5), y in word(5)) {
        prop_assume!(x != y);
        let p = DiagPoint::new(x, y).unwrap();
        let line = line_of(&p).unwrap();
        prop_assert!(line.contains(&p));
        prop_assert!(line_points(&line).contains(&p));
        prop_assert_eq!(line_points(&line).len(), 1usize << line.dimension());
    }

    #[test]
    fn grid_size_is_quadratic(mask in 1u64..(1 << 4), keep in proptest::collection::vec(any::<bool>(), 16)) {
        let flip = BitWord::new(4, mask).unwrap();
        let line = dncube::line::LineId::new(flip, BitWord::zero(4).unwrap()).unwrap();
        let pts: Vec<DiagPoint> = line_points(&line)
            .into_iter()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(p, _)| p)
            .collect();
        let grid = grid_of(&pts).unwrap();
        let k = pts.len();
        prop_assert_eq!(grid.len(), k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn hilbert_cube_has_full_sum_count(
        base in 1i64..50,
        gens in proptest::collection::vec(1i64..20, 0..=4)
    ) {
        let mut gens = gens;
        gens.sort_unstable();
        let cube = HilbertCube { base, generators: gens.clone() };
        let sums = cube.subset_sums();
        prop_assert_eq!(sums.len(), 1 << gens.len());
        prop_assert!(sums.iter().all(|&s| s >= base));
    }
}
