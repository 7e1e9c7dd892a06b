use qrflip::attack::{
    codeword_diff, minimal_flip_plan, nearest_message, plan_to_pixels, verify_plan, Alphabet,
};
use qrflip::qr::{
    apply_mask, block_layout, build_matrix, capacity, decode_codewords, decode_matrix, encode,
    EcLevel, MaskChoice, ModuleMatrix, QrConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_text(rng: &mut ChaCha8Rng, max: usize) -> Vec<u8> {
    let len = rng.gen_range(1..=max);
    (0..len).map(|_| rng.gen()).collect()
}

#[test]
fn plans_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut runs = 0;
    while runs < 500 {
        let v = rng.gen_range(1..=3);
        let l = EcLevel::ALL[rng.gen_range(0..4)];
        let cfg = QrConfig::new(v, l).unwrap();
        let text = random_text(&mut rng, capacity(v, l).unwrap());
        let mut target = text.clone();
        let p = rng.gen_range(0..text.len());
        target[p] ^= rng.gen_range(1..=255u8);
        let a = encode(&text, &cfg).unwrap();
        let b = encode(&target, &cfg).unwrap();
        let plan = minimal_flip_plan(&a, &b).unwrap();
        for block in &plan.blocks {
            assert!(block.residual() <= block.t);
        }
        assert_eq!(verify_plan(&a, &plan).unwrap(), target);
        let tampered = plan.apply(&a.interleaved);
        let layout = block_layout(v, l).unwrap();
        let d = decode_codewords(v, l, &tampered).unwrap();
        for (n, spec) in d.errors_per_block.iter().zip(&layout.blocks) {
            assert!(*n <= spec.t());
        }
        assert_eq!(plan.pixel_coords.len() as u32, plan.total_bit_flips);
        runs += 1;
    }
}

// Cheapest subset of differing positions after which the tampered word
// decodes to the target, by trying every subset.
fn exhaustive_best(
    a: &[u8],
    target: &[u8],
    diff: &[(usize, u8)],
    v: u32,
    l: EcLevel,
    use_decoder: bool,
    t: usize,
) -> u32 {
    let mut best = u32::MAX;
    for mask in 0u32..1 << diff.len() {
        let cost: u32 = diff
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, (_, x))| x.count_ones())
            .sum();
        if cost >= best {
            continue;
        }
        let ok = if use_decoder {
            let mut w = a.to_vec();
            for (i, (idx, x)) in diff.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    w[*idx] ^= x;
                }
            }
            decode_codewords(v, l, &w)
                .map(|d| d.text == target)
                .unwrap_or(false)
        } else {
            diff.len() - mask.count_ones() as usize <= t
        };
        if ok {
            best = cost;
        }
    }
    best
}

#[test]
fn greedy_matches_exhaustive_on_version_1() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for l in EcLevel::ALL {
        let cfg = QrConfig::new(1, l).unwrap();
        let t = block_layout(1, l).unwrap().blocks[0].t();
        for _ in 0..4 {
            let text = random_text(&mut rng, capacity(1, l).unwrap());
            let mut target = text.clone();
            let p = rng.gen_range(0..text.len());
            target[p] ^= rng.gen_range(1..=255u8);
            let a = encode(&text, &cfg).unwrap();
            let b = encode(&target, &cfg).unwrap();
            let diff: Vec<(usize, u8)> = codeword_diff(&a, &b)
                .unwrap()
                .rows
                .iter()
                .map(|r| (r.index, r.xor()))
                .collect();
            if diff.len() > 20 {
                continue;
            }
            let use_decoder = matches!(l, EcLevel::L | EcLevel::M);
            let best = exhaustive_best(&a.interleaved, &target, &diff, 1, l, use_decoder, t);
            assert_eq!(
                minimal_flip_plan(&a, &b).unwrap().total_bit_flips,
                best,
                "{l}"
            );
        }
    }
}

#[test]
fn edit_cost_does_not_depend_on_text() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (v, l, p, x) in [
        (1, EcLevel::L, 14usize, 0x01u8),
        (2, EcLevel::H, 4, 0x88),
        (3, EcLevel::Q, 7, 0x3C),
    ] {
        let cfg = QrConfig::new(v, l).unwrap();
        let cap = capacity(v, l).unwrap();
        let mut costs = Vec::new();
        for _ in 0..50 {
            let text: Vec<u8> = (0..cap).map(|_| rng.gen()).collect();
            let mut target = text.clone();
            target[p] ^= x;
            let plan = minimal_flip_plan(
                &encode(&text, &cfg).unwrap(),
                &encode(&target, &cfg).unwrap(),
            )
            .unwrap();
            costs.push(plan.total_bit_flips);
        }
        assert!(
            costs.windows(2).all(|w| w[0] == w[1]),
            "v{v} {l}: {costs:?}"
        );
    }
}

#[test]
fn pixel_to_codeword_bit_bijection() {
    for v in [1, 2, 7] {
        let cfg = QrConfig::new(v, EcLevel::M).unwrap();
        let set = encode(b"bijection", &cfg).unwrap();
        for mask in [0, 5] {
            let m = build_matrix(&set, &cfg.with_mask(MaskChoice::Fixed(mask))).unwrap();
            let base = apply_mask(&m, mask).read_codewords();
            let path = m.data_path();
            for (bit, &(r, c)) in path.iter().enumerate().take(base.len() * 8) {
                let mut t = m.clone();
                t.toggle(r, c);
                let read = apply_mask(&t, mask).read_codewords();
                let changed: Vec<usize> = (0..base.len() * 8)
                    .filter(|&i| (read[i / 8] ^ base[i / 8]) & (0x80 >> (i % 8)) != 0)
                    .collect();
                assert_eq!(changed, [bit]);
            }
        }
    }
}

#[test]
fn ec_share_brackets_nominal_recovery() {
    // Version 1 reserves p codewords against misdecoding: L 3, M 2, Q 1, H 1.
    for (l, p) in EcLevel::ALL.into_iter().zip([3, 2, 1, 1]) {
        let layout = block_layout(1, l).unwrap();
        let guaranteed = (layout.total_ec() - p) / 2;
        let share = guaranteed as f64 / layout.total_codewords() as f64 * 100.0;
        let nominal = l.nominal_recovery_percent() as f64;
        assert!(
            (share - nominal).abs() <= 4.0,
            "{l}: {share:.1}% vs {nominal}%"
        );
    }
}

#[test]
fn printable_case_pixels_decode() {
    let cfg = QrConfig::new(1, EcLevel::L).unwrap();
    let text = b"Some binary text.";
    let a = encode(text, &cfg).unwrap();
    let r = nearest_message(text, &cfg, Alphabet::Printable).unwrap();
    for c in &r.candidates {
        let plan = minimal_flip_plan(&a, &encode(&c.text, &cfg).unwrap()).unwrap();
        let pixels = plan_to_pixels(&plan, &cfg).unwrap();
        assert_eq!(pixels.len(), 7);
        let mut m = build_matrix(&a, &cfg).unwrap();
        for &(row, col) in &pixels {
            m.toggle(row, col);
        }
        assert_eq!(decode_matrix(&m).unwrap().text, c.text);
    }
}

#[test]
fn module_matrix_rejects_bad_sizes() {
    assert!(ModuleMatrix::from_modules(22, vec![false; 22 * 22]).is_err());
    assert!(ModuleMatrix::from_modules(21, vec![false; 20]).is_err());
}
