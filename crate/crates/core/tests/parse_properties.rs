mod common;

use common::poly;
use germ_core::{format_poly, parse_poly, ParseError};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parse_inverts_format(f in (1usize..=4).prop_flat_map(|n| poly(n, 6, 8))) {
        let text = format_poly(&f);
        prop_assert_eq!(parse_poly(&text, Some(f.var_count())).unwrap(), f);
    }

    #[test]
    fn parse_never_panics(text in "[-+*/^() z0-9]{0,24}") {
        if let Err(e) = parse_poly(&text, None) {
            prop_assert!(e.position() <= text.len());
        }
    }
}

#[test]
fn golden_parses() {
    let cases = [
        ("z3^2 - z1*z2^2", "z3^2 - z1*z2^2"),
        ("1/2*z1 + z2", "1/2*z1 + z2"),
        ("z1*(z2+z3)^2", "z1*z3^2 + 2*z1*z2*z3 + z1*z2^2"),
        ("-z1^2", "-z1^2"),
        ("(z1 - z1)", "0"),
    ];
    for (input, printed) in cases {
        let f = parse_poly(input, None).unwrap();
        let expanded = parse_poly(printed, Some(f.var_count())).unwrap();
        assert_eq!(f, expanded, "{input}");
    }
}

#[test]
fn rejects_index_zero_and_implicit_products() {
    assert!(matches!(
        parse_poly("z0 + 1", None),
        Err(ParseError::UnknownVariable { position: 0, .. })
    ));
    assert!(parse_poly("z1z2", None).is_err());
    assert!(parse_poly("", None).is_err());
    assert!(parse_poly("z1 +", None).is_err());
    assert!(parse_poly("z3", Some(2)).is_err());
}
