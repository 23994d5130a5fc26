use proptest::prelude::*;

use multiseg::oracle::{run_on_input, RunOptions};
use multiseg::{derivative, integral, lang, mw, Classification, DerivOutcome, Multisegment, Segment, Side};

fn segment(lo: i64, hi: i64) -> impl Strategy<Value = Segment> {
    (lo..=hi, 0..=(hi - lo)).prop_map(move |(a, len)| Segment::new(a, (a + len).min(hi)).unwrap())
}

fn multisegment(max: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(-4, 7), 0..=max).prop_map(Multisegment::from_segments)
}

const CLASSES: [Classification; 2] = [Classification::Lang, Classification::Zel];
const SIDES: [Side; 2] = [Side::R, Side::L];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn display_parse_round_trip(m in multisegment(7)) {
        let back: Multisegment = m.to_string().parse().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn json_round_trip(m in multisegment(7)) {
        let back: Multisegment = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn theta_is_an_involution(m in multisegment(7)) {
        prop_assert_eq!(m.theta().theta(), m);
    }

    #[test]
    fn zelevinsky_involution_is_an_involution(m in multisegment(6)) {
        let once = mw::involution(&m);
        prop_assert_eq!(once.rel_len(), m.rel_len());
        prop_assert_eq!(mw::involution(&once), m);
    }

    #[test]
    fn derivative_undoes_integral(m in multisegment(6), d in segment(-5, 8)) {
        for class in CLASSES {
            for side in SIDES {
                let up = integral(&m, d, class, side);
                prop_assert_eq!(derivative(&up, d, class, side), DerivOutcome::Finite(m.clone()), "{} {:?}", class, side);
            }
        }
    }

    #[test]
    fn integral_undoes_finite_derivative(m in multisegment(6), d in segment(-5, 8)) {
        for class in CLASSES {
            for side in SIDES {
                if let DerivOutcome::Finite(n) = derivative(&m, d, class, side) {
                    prop_assert_eq!(integral(&n, d, class, side), m.clone(), "{} {:?}", class, side);
                }
            }
        }
    }

    #[test]
    fn langlands_forms_agree(m in multisegment(6), d in segment(-5, 8)) {
        prop_assert_eq!(lang::st_derivative_lang(&m, d), lang::st_derivative_lang_by_sequences(&m, d));
        prop_assert_eq!(lang::st_integral_lang(&m, d), lang::st_integral_lang_by_sequences(&m, d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn law_registry_holds_off_the_grid(m in prop::collection::vec(segment(-3, 5), 1..=4).prop_map(Multisegment::from_segments)) {
        let opts = RunOptions { require_min_fired: false, ..RunOptions::default() };
        let report = run_on_input(&m, None, &opts);
        prop_assert!(report.ok(), "{}", report.to_text());
    }
}
