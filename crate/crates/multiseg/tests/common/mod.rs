#![allow(dead_code)]

use multiseg::{duality, highest, lang, mw, zel, Classification, DerivOutcome, Multisegment, Segment};

pub fn m(s: &str) -> Multisegment {
    s.parse().unwrap_or_else(|e| panic!("bad multisegment {s:?}: {e}"))
}

pub fn seg(a: i64, b: i64) -> Segment {
    Segment::new(a, b).unwrap()
}

fn segs(v: &[Segment]) -> String {
    v.iter().map(Segment::to_string).collect::<Vec<_>>().join(" ")
}

fn outcome(o: DerivOutcome) -> String {
    o.to_string()
}

fn canon(s: &str) -> String {
    if s.starts_with('[') && !s.contains(' ') {
        m(s).to_string()
    } else {
        s.to_string()
    }
}

/// A named case: the computed value and the expected rendering.
pub struct Golden {
    pub name: &'static str,
    pub got: String,
    pub want: String,
}

fn case(name: &'static str, got: String, want: &str) -> Golden {
    Golden { name, got, want: canon(want) }
}

fn without(base: &str, minus: &[Segment], plus: &[Segment]) -> String {
    let mut out = m(base);
    for s in minus {
        assert!(out.remove(*s), "{s} not in {base}");
    }
    for s in plus {
        out.insert(*s);
    }
    out.to_string()
}

pub fn cases() -> Vec<Golden> {
    let lang_m = "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]";
    let tds_m = "[0,4]+[1,5]+[1,4]+[1,3]+[1,2]+[2,5]+[2,3]";
    let tus_m = "[0,4]+[0,2]+[1,5]+[1,4]+[1,3]+[1]";
    let int_m = "[1]+[1,2]+[2,4]+[4,6]";
    let zel_m = "[0,4]+[2,4]+[2,5]+[2,5]+[3,5]+[4,5]";
    let ex1 = "[1,5]+[4,7]+[2,9]+[3,8]";
    let ex2 = "[1,5]+[1,14]+[2,9]+[2,15]+[3,13]+[4,7]+[4,12]";
    let hd_big = "[1,5]+[1,5]+[2,5]+[3,4]+[3,6]+[4,6]+[5,6]+[6,7]";

    let tds1 = lang::tds_step(&m(tds_m), 1).unwrap();
    let tds2 = lang::tds_step(&tds1.0, 1).unwrap();
    let tus1 = lang::tus_step(&m(tus_m), 0).unwrap();
    let tus2 = lang::tus_step(&tus1.0, 0).unwrap();
    let chain1 = zel::removal_upward_chain(&m(zel_m), 4, 5).unwrap();
    let rest1 = {
        let mut r = m(zel_m);
        chain1.segs.iter().for_each(|s| assert!(r.remove(*s)));
        r
    };
    let chain2 = zel::removal_upward_chain(&rest1, 4, 5).unwrap();
    let rest2 = {
        let mut r = rest1.clone();
        chain2.segs.iter().for_each(|s| assert!(r.remove(*s)));
        r
    };
    let mw_ex = mw::mw_step(&m("[0,2]+[2,4]+[2,5]+[3,5]+[4,6]")).unwrap();
    let ds_rows = |s: &str, a: i64, b: i64| {
        lang::downward_sequences(&m(s).window(a, b))
            .iter()
            .map(|r| {
                let mut v = r.segs.clone();
                v.sort();
                segs(&v)
            })
            .collect::<Vec<_>>()
            .join(" | ")
    };
    let ladder = "[1,4]+[3,6]+[7,9]";
    let demo = "[1,5]+[1,4]+[1,3]+[2,6]+[2,4]+[2,3]+[3,7]+[3,5]+[3,4]";
    let demo_n = without(demo, &[seg(1, 4)], &[seg(2, 4)]);
    let demo_out = "[1,5]+[2,4]+[1,3]+[2,6]+[2,3]+[3,4]+[4]+[3,7]+[3,5]";
    let rows =
        |n: &Multisegment| lang::upward_sequences(n).iter().map(|r| segs(&r.segs)).collect::<Vec<_>>().join(" | ");
    let us_rows = rows(&m(demo).window(1, 3));
    let us_rows_n = rows(&m(&demo_n).window(2, 3));
    let c1 = "[1,5]+[2,6]+[1,4]+[2,3]+[2]";
    let c2 = "[0,2]+[0,6]+[1,3]+[1,5]";
    let lang_d = |s: &str, a: i64, b: i64| outcome(lang::st_derivative_lang(&m(s), seg(a, b)));
    let lang_dd = |s: &str, a: i64, b: i64, c: i64, d: i64| {
        outcome(lang::st_derivative_lang(&m(s), seg(a, b)).and_then(|n| lang::st_derivative_lang(&n, seg(c, d))))
    };
    let unlinked = "[0]+[2,3]+[5,7]+[9]";

    vec![
        case("window [0,3]", m(lang_m).window(0, 3).to_string(), "[0,5]+[0,4]+[2,6]+[2,3]"),
        case("window [1,3]", m("[1]+[1,2]+[1,5]+[2,4]").window(1, 3).to_string(), "[1,5]+[2,4]"),
        case("mw step first segment", mw_ex.first_segment.to_string(), "[4,6]"),
        case("mw step reduced", mw_ex.reduced.to_string(), "[0,2]+[2,3]+[2,5]+[3,4]+[4,5]"),
        case("tds first removal", segs(&[tds1.1, tds1.2]), "[1,4] [2,5]"),
        case("tds second removal", segs(&[tds2.1, tds2.2]), "[1,2] [2,3]"),
        case(
            "rho derivative at 1",
            outcome(lang::rho_derivative_lang(&m(tds_m), 1)),
            &without(tds_m, &[seg(1, 3)], &[seg(2, 3)]),
        ),
        case("rho derivative at 0", outcome(lang::rho_derivative_lang(&m(tds_m), 0)), "infinity"),
        case("epsilon at 0", lang::epsilon_r_point(&m(tds_m), 0).to_string(), "0"),
        case("Us of first window", segs(&lang::upward_sequence(&m(lang_m).window(0, 2)).unwrap().segs), "[0,5] [2,6]"),
        case("Us of third row", segs(&lang::upward_sequence(&m("[1,2]+[2,3]")).unwrap().segs), "[1,2] [2,3]"),
        case("lang D [0,2]", outcome(lang::st_derivative_lang(&m(lang_m), seg(0, 2))), "[0,5]+[2,4]+[1,2]+[2,6]+[3]"),
        case("lang D [0,3]", outcome(lang::st_derivative_lang(&m(lang_m), seg(0, 3))), "[0,5]+[2,4]+[1,2]+[2,6]"),
        case("lang D [0,5]", outcome(lang::st_derivative_lang(&m(lang_m), seg(0, 5))), "infinity"),
        case("demo D [1]", lang_d(demo, 1, 1), &demo_n),
        case("demo D [1] twice", lang_dd(demo, 1, 1, 1, 1), "infinity"),
        case("demo Us rows", us_rows, "[1,5] [2,6] [3,7] | [1,4] [3,5] | [1,3] [2,4] | [2,3] [3,4]"),
        case("demo Us rows after D [1]", us_rows_n, "[2,6] [3,7] | [2,4] [3,5] | [2,4] | [2,3] [3,4]"),
        case("demo D [1,3]", lang_d(demo, 1, 3), demo_out),
        case("demo D [2,3] after D [1]", lang_dd(demo, 1, 1, 2, 3), demo_out),
        case("commutation, D [1,3] after D [2]", lang_dd(c1, 2, 2, 1, 3), "[1,5]+[2,6]+[2,4]"),
        case("commutation, D [2] after D [1,3]", lang_dd(c1, 1, 3, 2, 2), "[1,5]+[2,6]+[2,4]"),
        case("commutation, D [1]", lang_d(c2, 1, 1), "[0,2]+[0,6]+[2,3]+[1,5]"),
        case("commutation, D [0,2] after D [1]", lang_dd(c2, 1, 1, 0, 2), "[0,2]+[1,6]+[3]+[2,5]"),
        case("commutation, D [0,2]", lang_d(c2, 0, 2), "[0,2]+[1,6]+[3]+[1,5]"),
        case("commutation, D [1] after D [0,2]", lang_dd(c2, 0, 2, 1, 1), "[0,2]+[1,6]+[3]+[2,5]"),
        case("truncation, D [1,3]", lang_d("[1,5]+[2,4]+[2]+[3,6]", 1, 3), "[2,5]+[4]+[2]+[3,6]"),
        case(
            "truncation, D [1,3] second",
            lang_d("[1,6]+[2,3]+[2,5]+[3,4]+[3,7]", 1, 3),
            "[2,6]+[2,3]+[3,5]+[4]+[3,7]",
        ),
        case("truncation, D [1,3] third", lang_d("[1,5]+[4,7]+[2,3]+[2,5]+[3,4]", 1, 3), "[3,5]+[4,7]+[2,3]+[2,5]+[4]"),
        case("tus first removal", segs(&[tus1.1, tus1.2]), "[0,2] [1,3]"),
        case("tus second removal", segs(&[tus2.1, tus2.2]), "[0,4] [1,5]"),
        case(
            "rho integral (i)",
            lang::rho_integral_lang(&m(tus_m), 0).to_string(),
            &without(tus_m, &[seg(1, 4)], &[seg(0, 4)]),
        ),
        case(
            "rho integral (ii)",
            lang::rho_integral_lang(&m("[0,2]+[1,3]+[1]+[2,3]"), 1).to_string(),
            "[0,2]+[1,3]+[1]+[2,3]+[1]",
        ),
        case("Ds rows, first example", ds_rows(ex1, 1, 3), "[1,5] [4,7] | [3,8] | [2,9]"),
        case("Ds rows, second example", ds_rows(ex2, 1, 3), "[1,5] [4,7] | [2,9] [4,12] | [3,13] | [1,14] [2,15]"),
        case(
            "lang I [2,3], first example",
            lang::st_integral_lang(&m(ex1), seg(2, 3)).to_string(),
            "[1,5]+[3,7]+[2,9]+[2,8]",
        ),
        case(
            "lang I [1] after I [2,3], first example",
            lang::st_integral_lang(&m("[1,5]+[3,7]+[2,9]+[2,8]"), seg(1, 1)).to_string(),
            "[1,5]+[3,7]+[1,9]+[2,8]",
        ),
        case(
            "lang I [2,3], second example",
            lang::st_integral_lang(&m(ex2), seg(2, 3)).to_string(),
            "[1,5]+[1,14]+[2,9]+[2,15]+[2,13]+[4,7]+[3,12]",
        ),
        case(
            "lang I [1] after I [2,3], second example",
            lang::st_integral_lang(&m("[1,5]+[1,14]+[2,9]+[2,15]+[2,13]+[4,7]+[3,12]"), seg(1, 1)).to_string(),
            "[1,5]+[1,14]+[2,9]+[2,15]+[1,13]+[4,7]+[3,12]",
        ),
        case(
            "lang I [1,2]",
            lang::st_integral_lang(&m(int_m), seg(1, 2)).to_string(),
            &without(int_m, &[], &[seg(1, 2)]),
        ),
        case(
            "lang I [1,3]",
            lang::st_integral_lang(&m(int_m), seg(1, 3)).to_string(),
            &without(int_m, &[seg(2, 4)], &[seg(1, 4), seg(2, 3)]),
        ),
        case("zel chain, first", segs(&chain1.segs), "[0,4] [2,5]"),
        case("zel chain, second", segs(&chain2.segs), "[2,4] [3,5]"),
        case(
            "zel chain, exhausted",
            format!("{:?} ", zel::removal_upward_chain(&rest2, 4, 5).map(|c| c.segs)),
            "None ",
        ),
        case(
            "zel D [5]",
            outcome(zel::st_derivative_zel(&m(zel_m), seg(5, 5))),
            &without(zel_m, &[seg(4, 5)], &[seg(4, 4)]),
        ),
        case(
            "zel D [4,6]",
            outcome(zel::st_derivative_zel(&m("[0,4]+[3,4]+[2,5]+[3,5]+[4,6]"), seg(4, 6))),
            "[0,3]+[3,4]+[2,5]+[3,4]+[4,5]",
        ),
        case("zel D [5,6]", outcome(zel::st_derivative_zel(&m("[0,4]+[2,5]+[3,5]+[4,6]"), seg(5, 6))), "infinity"),
        case(
            "zel I [2,3]",
            zel::st_integral_zel(&m("[0,2]+[0,1]+[0,1]+[1,2]+[1]+[2,3]"), seg(2, 3)).to_string(),
            &without("[0,2]+[0,1]+[0,1]+[1,2]+[1]+[2,3]", &[seg(0, 1)], &[seg(0, 2), seg(3, 3)]),
        ),
        case("duality, first example", duality::dual_dr(&m("[2,4]+[1,7]"), 10).unwrap().to_string(), "[-5,1]+[-2,0]"),
        case("duality, second example", duality::dual_dr(&m("[2,6]+[1,5]"), 15).unwrap().to_string(), "[-8,1]+[-9,0]"),
        case(
            "window duality, first example",
            duality::dual_dr_seg(&m("[2,4]+[1,7]"), 10, seg(0, 1)).unwrap().to_string(),
            "[-5,1]+[-2,0]+[-8,1]",
        ),
        case(
            "window duality, second example",
            duality::dual_dr_seg(&m("[2,6]+[1,5]"), 15, seg(1, 4)).unwrap().to_string(),
            "[-8,1]+[-9,0]+[-10,4]",
        ),
        case("hd lang, eight segments", highest::hd_lang(&m(hd_big)).to_string(), "[2,5]+[3,5]+[4,5]+[5,6]"),
        case("hd lang, ladder", highest::hd_lang(&m(ladder)).to_string(), "[2,4]+[6]"),
        case("hd lang, generic", highest::hd_lang(&m(unlinked)).to_string(), "0"),
        case("hd zel", highest::hd_zel(&m("[1,4]+[2,5]+[3,4]+[2,6]")).to_string(), "[4,5]+[4]+[6]"),
        case("hd zel, unlinked", highest::hd_zel(&m(unlinked)).to_string(), "[0]+[3]+[7]+[9]"),
        case("bz lang, ladder", highest::bz_highest(&m(ladder), Classification::Lang).to_string(), "[2,4]+[6]"),
    ]
}
