//! Randomized operation sequences against the quadratic scan oracle.
//! Every min_pair answer must match exactly, tie rule included: smallest
//! additively-weighted distance, then smallest blue index, then smallest
//! red index. Reds are fixed at construction and only deleted, matching
//! the search's shrinking frontier; blues come and go freely.

mod common;

use common::drive_wbcp as drive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use udg::oracle::gen::{generate, GenSpec, Shape};
use udg::oracle::naive_bcp;
use udg::wbcp::{WbcpIndex, WeightedBlue};
use udg::PointSet;

#[test]
fn long_sequences_match_the_scan() {
    let ps = generate(&GenSpec {
        n: 240,
        shape: Shape::UniformSquare,
        side: 6.0,
        seed: 5,
        ..GenSpec::default()
    })
    .unwrap();
    let mut total = 0;
    for seed in 0..6 {
        total += drive(&ps, seed, 2500);
    }
    assert!(total >= 15000);
}

#[test]
fn short_sequences_over_many_layouts() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut total = 0;
    for round in 0..160u64 {
        let n = rng.gen_range(3..24);
        let ps = generate(&GenSpec {
            n,
            shape: if round % 3 == 0 {
                Shape::Grid
            } else {
                Shape::UniformSquare
            },
            side: rng.gen_range(0.5..4.0),
            seed: round,
            ..GenSpec::default()
        })
        .unwrap();
        total += drive(&ps, round ^ 0xF00D, 60);
    }
    assert!(total >= 9000);
}

/// Exact-tie layouts: symmetric points force equal deltas; the winner
/// must be the smallest blue index, then the smallest red index.
#[test]
fn tie_rule_is_exercised_and_exact() {
    let ps = PointSet::from_coords(&[
        (0.0, 0.0),
        (2.0, 0.0),
        (1.0, 1.0),
        (1.0, -1.0),
        (0.0, 2.0),
        (2.0, 2.0),
    ])
    .unwrap();
    // blues 0 and 1 both at distance sqrt(2) from reds 2 and 3
    let mut idx = WbcpIndex::new(
        &ps,
        &[
            WeightedBlue { index: 0, weight: 0.5 },
            WeightedBlue { index: 1, weight: 0.5 },
        ],
        &[2, 3],
    )
    .unwrap();
    let (b, r, d) = idx.min_pair().unwrap();
    assert_eq!((b, r), (0, 2));
    assert_eq!(d, 0.5 + 2.0f64.sqrt());

    // removing the winning red promotes the same blue with red 3
    idx.delete_red(2).unwrap();
    assert_eq!(idx.min_pair().unwrap(), (0, 3, 0.5 + 2.0f64.sqrt()));

    // removing blue 0 promotes blue 1
    idx.delete_blue(0).unwrap();
    assert_eq!(idx.min_pair().unwrap(), (1, 3, 0.5 + 2.0f64.sqrt()));

    // randomized cross-check on a lattice: grids are all ties
    let grid = generate(&GenSpec {
        n: 49,
        shape: Shape::Grid,
        side: 6.0,
        ..GenSpec::default()
    })
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let all: Vec<usize> = (0..49).collect();
    for _ in 0..40 {
        let mut shuffled = all.clone();
        shuffled.shuffle(&mut rng);
        let split = rng.gen_range(1..48);
        let blues: Vec<WeightedBlue> = shuffled[..split]
            .iter()
            .map(|&i| WeightedBlue {
                index: i,
                // coarse weights so distinct blues often tie exactly
                weight: (i % 3) as f64,
            })
            .collect();
        let reds = &shuffled[split..];
        let mut idx = WbcpIndex::new(&grid, &blues, reds).unwrap();
        assert_eq!(idx.min_pair(), naive_bcp(&grid, &blues, reds));
    }
}
