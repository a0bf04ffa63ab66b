use freeqg::exact::{format_rational, parse_rational};
use freeqg::fusion::{dim_u, fuse, generalized_catalan, j_expand, j_inverse, star_moment};
use freeqg::pairings::count_colored;
use freeqg::{FusionElement, Letter, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bits| {
        Word::from_letters(
            bits.into_iter()
                .map(|b| if b { Letter::Alpha } else { Letter::Beta })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn display_parse_round_trip(x in word(16)) {
        let back: Word = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn involution_is_antimultiplicative(x in word(8), y in word(8)) {
        prop_assert_eq!(x.concat(&y).involute(), y.involute().concat(&x.involute()));
        prop_assert_eq!(x.involute().involute(), x);
    }

    #[test]
    fn fusion_is_associative(x in word(5), y in word(5), z in word(5)) {
        let (ex, ey, ez) = (
            FusionElement::word(x),
            FusionElement::word(y),
            FusionElement::word(z),
        );
        prop_assert_eq!(ex.fuse(&ey).fuse(&ez), ex.fuse(&ey.fuse(&ez)));
    }

    #[test]
    fn fusion_has_positive_coefficients_and_top_term(x in word(7), y in word(7)) {
        let f = fuse(&x, &y);
        prop_assert!(f.is_non_negative());
        prop_assert_eq!(f.coeff(&x.concat(&y)), BigInt::from(1));
        prop_assert!(f.support().all(|z| z.len() <= x.len() + y.len()));
    }

    #[test]
    fn moments_agree(x in word(12)) {
        let c = generalized_catalan(&x);
        prop_assert_eq!(&c, &count_colored(&x));
        prop_assert_eq!(&c, &star_moment(&x));
    }

    #[test]
    fn j_round_trip(x in word(7)) {
        prop_assert_eq!(j_inverse(&j_expand(&x)), FusionElement::word(x));
    }

    #[test]
    fn dimension_is_multiplicative(x in word(5), y in word(5), n in 2usize..5) {
        let sum: BigInt = fuse(&x, &y).terms().map(|(z, c)| c * dim_u(z, n).unwrap()).sum();
        prop_assert_eq!(sum, dim_u(&x, n).unwrap() * dim_u(&y, n).unwrap());
    }

    #[test]
    fn rational_text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = BigRational::new(p.into(), q.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}
