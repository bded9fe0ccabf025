mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lyndon2d::classify::{classify_matrix, longest_suffix_prefix};
use lyndon2d::dictmatch::{brute_search, search_text, DictionaryIndex, Occurrence};
use lyndon2d::lw2d::{
    alg1_2dlw, alg2_2dlw, alg2_2dlw_traced, conjugate_offsets, incremental_2dlw, materialize_lcm_matrix,
    naive_2dlw, Alg1Bound, SummaryColumn, DEFAULT_CAP,
};
use lyndon2d::strings1d::{compute_period, is_lyndon, least_rotation, summarize_row, NameRegistry};
use lyndon2d::workbench::{generate, parse_matrix, render_matrix, GenOptions, PeriodSpec};
use lyndon2d::{HALF, QUARTER};

fn column() -> impl Strategy<Value = SummaryColumn> {
    prop::collection::vec(1usize..=8, 1..=12)
        .prop_flat_map(|periods| {
            let lw: Vec<_> = periods.iter().map(|&p| 0..p).collect();
            (Just(periods), lw)
        })
        .prop_map(|(periods, lwpos)| SummaryColumn::anonymous(periods, lwpos).unwrap())
}

fn word(max_len: usize, letters: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..letters, 1..=max_len).prop_map(|v| v.into_iter().map(|c| b'a' + c).collect())
}

proptest! {
    #[test]
    fn rotating_to_the_least_rotation_gives_a_lyndon_word(s in word(12, 3)) {
        let p = brute_period(&s);
        prop_assume!(p == s.len() || s.len() % p != 0);
        let (k, w) = least_rotation(&s).unwrap();
        prop_assert!(is_lyndon(&w));
        prop_assert_eq!(&w, &brute_lyndon(&s));
        prop_assert_eq!(w, [&s[k..], &s[..k]].concat());
    }

    #[test]
    fn summary_matches_brute_force(w in word(6, 3), shift in 0usize..6, extra in 0usize..10) {
        let p = brute_period(&w);
        prop_assume!(p == w.len());
        let s = periodic(&w, shift % p, 2 * p + extra);
        let mut reg = NameRegistry::new();
        let sum = summarize_row(&s, &mut reg, HALF).unwrap();
        prop_assert_eq!((sum.period, sum.lwpos), brute_row(&s));
        prop_assert_eq!(reg.word(sum.name).unwrap(), &s[sum.lwpos..sum.lwpos + sum.period]);
        prop_assert_eq!(compute_period(&s).unwrap(), brute_period(&s));
    }

    #[test]
    fn names_agree_exactly_for_conjugate_periods(a in word(5, 2), b in word(5, 2), sa in 0usize..5, sb in 0usize..5) {
        prop_assume!(brute_period(&a) == a.len() && brute_period(&b) == b.len());
        let ra = periodic(&a, sa % a.len(), 12);
        let rb = periodic(&b, sb % b.len(), 12);
        let mut reg = NameRegistry::new();
        let na = summarize_row(&ra, &mut reg, HALF).unwrap().name;
        let nb = summarize_row(&rb, &mut reg, HALF).unwrap().name;
        let conjugate = a.len() == b.len() && rotations(&a).contains(&b);
        prop_assert_eq!(na == nb, conjugate);
    }

    #[test]
    fn three_algorithms_agree(col in column()) {
        let naive = naive_2dlw(&col, DEFAULT_CAP).unwrap();
        let a1 = alg1_2dlw(&col);
        let (a2, steps) = alg2_2dlw_traced(&col);
        prop_assert_eq!(&naive, &a1);
        prop_assert_eq!(&naive, &a2);
        let faithful = incremental_2dlw(&col, Alg1Bound::Faithful { cap: DEFAULT_CAP }).unwrap();
        prop_assert_eq!(&faithful, &a1);

        // verification identity
        prop_assert_eq!(conjugate_offsets(&col, &a2.z), a2.offsets.clone());
        // shift bound and z as a sum of x[i] * LCM[i-1]
        prop_assert!(a2.z < *a2.lcm());
        let mut z = BigUint::from(0u32);
        let mut prev = BigUint::from(1u32);
        for (step, l) in steps.iter().zip(&a2.lcm_prefix) {
            prop_assert!(BigUint::from(step.x) * &prev < *l || step.x == 0);
            z += &prev * step.x;
            prev = l.clone();
        }
        prop_assert_eq!(&z, &a2.z);
        // first row
        prop_assert_eq!(a2.offsets[0], 0);
        prop_assert_eq!(steps[0].x, col.lwpos[0]);
    }

    #[test]
    fn each_row_offset_is_the_minimum_of_its_sequence(col in column()) {
        let (lw, steps) = alg2_2dlw_traced(&col);
        let mut prev: u64 = 1;
        for (i, step) in steps.iter().enumerate() {
            let p = col.periods[i] as u64;
            let g = gcd(prev, p);
            prop_assert_eq!(step.gcd as u64, g);
            let f = step.first_shift as u64;
            let seq: Vec<u64> = (0..p / g)
                .map(|x| ((f as i128 - (prev as i128) * x as i128).rem_euclid(p as i128)) as u64)
                .collect();
            let min = *seq.iter().min().unwrap();
            let first_x = seq.iter().position(|&v| v == min).unwrap();
            prop_assert_eq!(min, f % g);
            prop_assert!((lw.offsets[i] as u64) < g);
            prop_assert_eq!(lw.offsets[i] as u64, min);
            prop_assert_eq!(step.x, first_x);
            prev = lw.lcm_prefix[i].to_u64().unwrap();
        }
    }

    #[test]
    fn shifting_the_column_keeps_the_offsets(col in column(), c in 0u64..1000) {
        let lw = alg2_2dlw(&col);
        let lcm = lw.lcm().to_u64().unwrap();
        let c = c % lcm;
        let shifted = col.shifted(&BigUint::from(c));
        let lw2 = alg2_2dlw(&shifted);
        prop_assert_eq!(&lw2.offsets, &lw.offsets);
        let expected = (lw.z.to_u64().unwrap() + lcm - c) % lcm;
        prop_assert_eq!(lw2.z.to_u64().unwrap(), expected);
    }

    #[test]
    fn conjugate_arrays_are_distinct(col in column()) {
        let lcm = lcm_all(&col.periods);
        let arrays: BTreeSet<Vec<usize>> = (0..lcm).map(|c| conjugate_offsets(&col, &BigUint::from(c))).collect();
        prop_assert_eq!(arrays.len() as u64, lcm);
        let (min, z) = brute_min_conjugate(&col.periods, &col.lwpos);
        let lw = alg2_2dlw(&col);
        prop_assert_eq!(lw.offsets, min);
        prop_assert_eq!(lw.z.to_u64().unwrap(), z);
    }

    #[test]
    fn conjugate_offsets_match_rotated_matrix(col in column(), seed in any::<u64>(), c in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lcm = lcm_all(&col.periods) as usize;
        let width = lcm * (1 + 16 / lcm);
        let rows: Matrix = col
            .periods
            .iter()
            .zip(&col.lwpos)
            .map(|(&p, &l)| {
                let w = brute_lyndon(&random_primitive(&mut rng, p, 3));
                row_with_lwpos(&w, l, width)
            })
            .collect();
        prop_assert_eq!(brute_lwpos_array(&rows), (col.periods.clone(), col.lwpos.clone()));
        let c = (c as usize) % lcm;
        let rotated: Matrix = rows.iter().map(|r| { let mut r = r.clone(); r.rotate_left(c); r }).collect();
        prop_assert_eq!(conjugate_offsets(&col, &BigUint::from(c)), brute_lwpos_array(&rotated).1);
    }

    #[test]
    fn materialized_rows_continue_their_period(seed in any::<u64>(), periods in prop::collection::vec(1usize..=5, 1..6), width in 10usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows = random_matrix(&mut rng, &periods, width, 3);
        let lcm = materialize_lcm_matrix(&rows, DEFAULT_CAP).unwrap();
        let l = lcm_all(&periods) as usize;
        for (out, (row, &p)) in lcm.iter().zip(rows.iter().zip(&periods)) {
            prop_assert_eq!(out.len(), l);
            for j in 0..l {
                prop_assert_eq!(out[j], row[j % p]);
                if j < width { prop_assert_eq!(out[j], row[j]); }
            }
        }
    }

    #[test]
    fn classes_survive_rotation(seed in any::<u64>(), periods in prop::collection::vec(1usize..=6, 1..8), c in 0usize..100) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, &periods, 12, 3);
        let mut reg = NameRegistry::new();
        let a = classify_matrix(&m, &mut reg, HALF).unwrap();
        let b = classify_matrix(&shift_left(&m, c), &mut reg, HALF).unwrap();
        prop_assert_eq!(&a.key, &b.key);
        let lcm = a.lcm.to_u64().unwrap();
        let expected = (a.z.to_u64().unwrap() + lcm - (c as u64 % lcm)) % lcm;
        prop_assert_eq!(b.z.to_u64().unwrap(), expected);
    }

    #[test]
    fn overlaps_are_sound_and_complete(seed in any::<u64>(), m in 8usize..=24, rows in 1usize..6, c in 0usize..64, perturb in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let periods: Vec<usize> = (0..rows).map(|_| rand::Rng::gen_range(&mut rng, 1..=m / 4)).collect();
        let a = random_matrix(&mut rng, &periods, m, 2);
        let mut b = shift_left(&a, c);
        if perturb {
            let i = rand::Rng::gen_range(&mut rng, 0..rows);
            b[i] = shift_left(&b[i..=i], 1).remove(0);
        }
        let mut reg = NameRegistry::new();
        let ca = classify_matrix(&a, &mut reg, QUARTER).unwrap();
        let cb = classify_matrix(&b, &mut reg, QUARTER).unwrap();
        let got = longest_suffix_prefix(&ca, &cb).unwrap();
        prop_assert_eq!(got, overlap_oracle(&a, &b));
        if let Some(w) = got {
            for (ra, rb) in a.iter().zip(&b) {
                prop_assert_eq!(&ra[m - w..], &rb[..w]);
            }
        }
    }

    #[test]
    fn generated_files_round_trip(seed in any::<u64>(), rows in 1usize..10, width in 4usize..30) {
        let opts = GenOptions { rows, width, periods: PeriodSpec::Random, alphabet: 3, seed, rotate: None, strict: false };
        let m = generate(&opts).unwrap();
        let parsed = parse_matrix(&render_matrix(&m)).unwrap();
        prop_assert_eq!(&parsed, &m);
        let list: Vec<usize> = m.iter().map(|r| compute_period(r).unwrap()).collect();
        let again = generate(&GenOptions { periods: PeriodSpec::List(list.clone()), ..opts }).unwrap();
        let got: Vec<usize> = again.iter().map(|r| compute_period(r).unwrap()).collect();
        prop_assert_eq!(got, list);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn search_equals_brute_force_on_periodic_texts(seed in any::<u64>(), half in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = 8;
        let max_p = if half { 4 } else { 2 };
        let fraction = if half { HALF } else { QUARTER };
        // a few patterns over two name sequences, some of them shifts of each other
        let seqs: Vec<Vec<usize>> = (0..2).map(|_| (0..m).map(|_| rand::Rng::gen_range(&mut rng, 1..=max_p)).collect()).collect();
        let words: Vec<Vec<Vec<u8>>> = seqs.iter().map(|ps| ps.iter().map(|&p| random_primitive(&mut rng, p, 2)).collect()).collect();
        let mut patterns: Vec<Matrix> = Vec::new();
        for _ in 0..4 {
            let g = rand::Rng::gen_range(&mut rng, 0..2);
            let p: Matrix = words[g].iter().map(|w| periodic(w, rand::Rng::gen_range(&mut rng, 0..w.len()), m)).collect();
            patterns.push(p);
        }
        // text: bands continuing pattern rows, separated by random periodic rows
        let (n1, n2) = (40, 37);
        let mut text: Matrix = Vec::new();
        while text.len() < n1 {
            if rand::Rng::gen_bool(&mut rng, 0.6) && text.len() + m <= n1 {
                let p = &patterns[rand::Rng::gen_range(&mut rng, 0..patterns.len())];
                let c0 = rand::Rng::gen_range(&mut rng, 0..n2 - m);
                for row in p {
                    let per = brute_period(row);
                    text.push((0..n2).map(|j| row[(j + per * n2 - c0) % per]).collect());
                }
            } else {
                let per = rand::Rng::gen_range(&mut rng, 1..=max_p);
                let w = random_primitive(&mut rng, per, 2);
                text.push(periodic(&w, 0, n2));
            }
        }
        text.truncate(n1);
        let index = DictionaryIndex::build_with_fraction(&patterns, fraction).unwrap();
        let got: BTreeSet<Occurrence> = search_text(&text, &index);
        let want = brute_search(&text, &patterns);
        prop_assert_eq!(got, want);
    }
}
