use proptest::prelude::*;
use qrflip::codes::{bch_generator, cyclic_generator_matrix, nearest_codeword};
use qrflip::{Field, Poly};

fn gf16() -> Field {
    Field::new(4, 0b1_0011).unwrap()
}

#[test]
fn gf16_axioms_exhaustive() {
    let f = gf16();
    for a in 0..16u16 {
        assert_eq!(f.add(a, 0), a);
        assert_eq!(f.mul(a, 1), a);
        assert_eq!(f.add(a, a), 0);
        if a != 0 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        for b in 0..16u16 {
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            for c in 0..16u16 {
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

#[test]
fn gf256_log_exp_round_trip() {
    let f = Field::qr();
    for a in 1..=255u16 {
        let l = f.log(a).unwrap();
        assert_eq!(f.alpha_pow(l as i64), a);
    }
    assert_eq!(f.log(0), None);
}

#[test]
fn bch_generators_divide_x_n_minus_one() {
    for (m, poly) in [(3, 0b1011), (4, 0b1_0011)] {
        let f = Field::new(m, poly).unwrap();
        let n = f.group_order();
        for delta in 2..=n {
            let g = bch_generator(&f, delta).unwrap();
            let (_, r) = Poly::x_n_minus_one(Field::gf2(), n).divmod(&g).unwrap();
            assert!(r.is_zero(), "GF(2^{m}) delta {delta}");
        }
    }
}

#[test]
fn hamming_7_4_corrects_one_bit_only() {
    let f8 = Field::new(3, 0b1011).unwrap();
    let g = bch_generator(&f8, 3).unwrap();
    let words = cyclic_generator_matrix(&g, 7).unwrap().row_span();
    let mut two_bit_failure = false;
    for (i, w) in words.iter().enumerate() {
        for a in 0..7 {
            let mut r = w.clone();
            r[a] ^= 1;
            assert_eq!(nearest_codeword(&words, &r).map(|x| x.0), Some(i));
            for b in a + 1..7 {
                let mut r2 = r.clone();
                r2[b] ^= 1;
                if nearest_codeword(&words, &r2).map(|x| x.0) != Some(i) {
                    two_bit_failure = true;
                }
            }
        }
    }
    assert!(two_bit_failure);
}

fn poly16(f: &Field, v: Vec<u16>) -> Poly<'_> {
    Poly::new(f, v)
}

proptest! {
    #[test]
    fn divmod_recomposes(a in prop::collection::vec(0u16..16, 0..20), b in prop::collection::vec(0u16..16, 1..10)) {
        let f = gf16();
        let a = poly16(&f, a);
        let b = poly16(&f, b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn cyclic_shift_is_mul_by_x(v in prop::collection::vec(0u16..16, 15)) {
        let f = gf16();
        let p = poly16(&f, v.clone());
        let shifted = p.shift(1).rem(&Poly::x_n_minus_one(&f, 15)).unwrap();
        let mut rotated = v.clone();
        rotated.rotate_right(1);
        prop_assert_eq!(shifted, poly16(&f, rotated));
    }

    #[test]
    fn eval_is_ring_homomorphism(a in prop::collection::vec(0u16..16, 0..8), b in prop::collection::vec(0u16..16, 0..8), x in 0u16..16) {
        let f = gf16();
        let (pa, pb) = (poly16(&f, a), poly16(&f, b));
        prop_assert_eq!(pa.mul(&pb).unwrap().eval(x), f.mul(pa.eval(x), pb.eval(x)));
        prop_assert_eq!(pa.add(&pb).unwrap().eval(x), f.add(pa.eval(x), pb.eval(x)));
    }
}
