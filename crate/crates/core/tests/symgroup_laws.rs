use num_bigint::BigUint;

use vertexlab::graphs::Permutation;
use vertexlab::symgroup::{
    char_sum_lhs, char_sum_lhs_enumerated, character, class_size, dimension, factorial, partitions_of,
    rectangular_dimension, IntegerPartition,
};

#[test]
fn sign_is_inversion_parity() {
    for n in 0..=6 {
        for pi in Permutation::all(n) {
            let img = pi.images();
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| img[i] > img[j]).count();
            let by_inversions = if inversions % 2 == 0 { 1 } else { -1 };
            let by_orbits = if (n - pi.orbit_count()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(pi.sign(), by_inversions);
            assert_eq!(pi.sign(), by_orbits);
        }
    }
}

#[test]
fn squares_of_dimensions_sum_to_the_group_order() {
    for n in 0..=8 {
        let total: BigUint = partitions_of(n).unwrap().iter().map(|l| dimension(l).pow(2)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn class_sums_agree_with_enumeration() {
    for n in 0..=6 {
        for lambda in partitions_of(n).unwrap() {
            assert_eq!(char_sum_lhs(&lambda).unwrap(), char_sum_lhs_enumerated(&lambda).unwrap());
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=6 {
        let parts = partitions_of(n).unwrap();
        for a in &parts {
            for b in &parts {
                let sum: i128 = parts
                    .iter()
                    .map(|mu| {
                        let size: i128 = class_size(mu).try_into().unwrap();
                        size * i128::from(character(a, mu).unwrap()) * i128::from(character(b, mu).unwrap())
                    })
                    .sum();
                let expected: i128 = if a == b { factorial(n).try_into().unwrap() } else { 0 };
                assert_eq!(sum, expected, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn rectangle_roots_do_not_decrease() {
    // f(d,m)^{1/(dm)} <= f(d,m+1)^{1/(d(m+1))}, compared as integer powers
    for d in 2..=3usize {
        for m in 1..4usize {
            let a = rectangular_dimension(d, m).unwrap();
            let b = rectangular_dimension(d, m + 1).unwrap();
            assert!(a.pow((d * (m + 1)) as u32) <= b.pow((d * m) as u32), "d={d} m={m}");
            assert_eq!(a, dimension(&IntegerPartition::rectangle(d, m)));
        }
    }
}
