use cqs::cyclotomic::{constants, CyclotomicNumber};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn element() -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-4i64..=4, 0i64..88), 0..4).prop_map(|terms| {
        terms.into_iter().fold(CyclotomicNumber::zero(), |acc, (c, e)| {
            &acc + &CyclotomicNumber::zeta_pow(e).scale(&BigRational::from_integer(BigInt::from(c)))
        })
    })
}

#[test]
fn constants_behave() {
    let one = CyclotomicNumber::one();
    assert_eq!(constants::lambda().pow(22), one);
    assert_ne!(constants::lambda().pow(11), one);
    assert_eq!(constants::zeta8().pow(8), one);
    assert_eq!(constants::imaginary_unit().pow(2), -&one);
    assert_eq!(constants::sqrt2().pow(2), CyclotomicNumber::from_integer(2));
    assert_eq!(&constants::sqrt2() * &constants::inv_sqrt2(), one);
    assert_eq!(CyclotomicNumber::zeta_pow(88), one);
    assert_eq!(CyclotomicNumber::zeta_pow(-1), CyclotomicNumber::zeta_pow(87));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeta_powers_multiply(a in -200i64..200, b in -200i64..200) {
        prop_assert_eq!(&CyclotomicNumber::zeta_pow(a) * &CyclotomicNumber::zeta_pow(b), CyclotomicNumber::zeta_pow(a + b));
    }

    #[test]
    fn ring_axioms(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
    }
}
