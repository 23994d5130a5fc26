use std::fmt::Display;

use serde::Serialize;

use crate::calculus::{derivative, epsilon_r, integral, Classification, Side};
use crate::duality::{dual_dr, dual_dr_seg, good_range, r0};
use crate::highest::{derivative_nonzero_by_hd, hd_lang, hd_zel};
use crate::lang;
use crate::multisegment::{DerivOutcome, Multisegment};
use crate::mw::{self, involution, linked_by_mapping, minimally_linked, mw_iterate, mw_step};
use crate::segment::Segment;
use crate::zel;

use Classification::{Lang, Zel};
use Side::{L, R};

/// What a law is evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Once per multisegment.
    Multisegment,
    /// Once per multisegment and window segment.
    Window,
}

#[derive(Clone, Copy)]
pub enum Check {
    Multi(fn(&Multisegment, &mut Probe)),
    Window(fn(&Multisegment, Segment, &mut Probe)),
}

/// An executable identity checked over a universe.
#[derive(Clone, Copy)]
pub struct Law {
    pub id: &'static str,
    /// Acceptance criterion the law belongs to, if any.
    pub criterion: Option<u8>,
    /// Minimum number of non-vacuous instances expected under default bounds.
    pub min_fired: u64,
    pub summary: &'static str,
    pub check: Check,
}

impl Law {
    pub fn scope(&self) -> Scope {
        match self.check {
            Check::Multi(_) => Scope::Multisegment,
            Check::Window(_) => Scope::Window,
        }
    }

    /// Runs the law on one input; `d` is ignored by multisegment-scoped laws.
    pub fn eval(&self, m: &Multisegment, d: Option<Segment>) -> Probe {
        let mut p = Probe::default();
        match (self.check, d) {
            (Check::Multi(f), _) => f(m, &mut p),
            (Check::Window(f), Some(d)) => f(m, d, &mut p),
            (Check::Window(_), None) => {}
        }
        p
    }
}

/// The first failed comparison of one evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

/// Collects the number of non-vacuous instances and the first failure.
#[derive(Clone, Debug, Default)]
pub struct Probe {
    pub fired: u64,
    pub failure: Option<Failure>,
}

impl Probe {
    pub fn fire(&mut self) {
        self.fired += 1;
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn fail(&mut self, params: impl Into<String>, lhs: impl Display, rhs: impl Display) {
        if self.failure.is_none() {
            self.failure = Some(Failure { params: params.into(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    pub fn eq<T: PartialEq + Display>(&mut self, params: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.fail(params(), lhs, rhs);
        }
    }

    pub fn holds(&mut self, cond: bool, params: impl FnOnce() -> String, lhs: impl Display, rhs: impl Display) {
        if !cond {
            self.fail(params(), lhs, rhs);
        }
    }
}

fn seg(a: i64, b: i64) -> Segment {
    Segment::raw(a, b)
}

fn opt(m: Option<Multisegment>) -> DerivOutcome {
    DerivOutcome::from(m)
}

/// Every registered law, in report order.
pub fn registry() -> &'static [Law] {
    &LAWS
}

pub fn find(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}

macro_rules! law {
    ($id:expr, $crit:expr, $min:expr, $summary:expr, multi $f:ident) => {
        Law { id: $id, criterion: $crit, min_fired: $min, summary: $summary, check: Check::Multi($f) }
    };
    ($id:expr, $crit:expr, $min:expr, $summary:expr, window $f:ident) => {
        Law { id: $id, criterion: $crit, min_fired: $min, summary: $summary, check: Check::Window($f) }
    };
}

static LAWS: [Law; 39] = [
    law!("lang.inverse_r", Some(2), 1, "D(I(m)) = m and I(D(m)) = m, Langlands, right", window lang_inverse_r),
    law!("lang.inverse_l", Some(2), 1, "D(I(m)) = m and I(D(m)) = m, Langlands, left", window lang_inverse_l),
    law!("zel.inverse_r", Some(2), 1, "D(I(m)) = m and I(D(m)) = m, Zelevinsky, right", window zel_inverse_r),
    law!("zel.inverse_l", Some(2), 1, "D(I(m)) = m and I(D(m)) = m, Zelevinsky, left", window zel_inverse_l),
    law!("mw.involution", Some(3), 1, "(m^#)^# = m", multi mw_involution),
    law!("zel.mw_oracle", Some(3), 1, "D^Zel_{Δ(m)}(m) = D^MW(m)", multi zel_mw_oracle),
    law!("cross.derivative", Some(3), 1, "D^Zel(m) = #∘D^Lang∘#(m), both sides", window cross_derivative),
    law!("cross.integral", Some(3), 1, "I^Zel(m) = #∘I^Lang∘#(m), both sides", window cross_integral),
    law!("zel.multiple_mw", Some(4), 100, "(D^MW)^{r+1}(m) = (D^MW)^r(D^Zel_[b,c](m))", multi zel_multiple_mw),
    law!("zel.integral_mw", Some(4), 100, "(D^MW)^{r+1}(I^Zel_[b,c](m)) = (D^MW)^r(m)", multi zel_integral_mw),
    law!("dual.prop_i", Some(5), 1, "|I(m)| = |m| implies D^L(D_r m) = D_r(I m)", window dual_prop_i),
    law!("dual.prop_ii", Some(5), 1, "|I(m)| > |m| implies D^L(D_r^[a,b] m) = D_r(I m)", window dual_prop_ii),
    law!("dual.prop_iii", Some(5), 1, "|I(m)| = |m| iff D^L(D_r m) is finite", window dual_prop_iii),
    law!("dual.cuspidal", Some(5), 1, "cuspidal equivalence and transfer under D_r", window dual_cuspidal),
    law!("dual.zel", Some(5), 1, "|I^{Zel,L}(m)| = |m| iff D^Zel(D_r m) is finite, and then D_r(I m) = D^Zel(D_r m)", window dual_zel),
    law!("dual.r_stability", Some(5), 1, "duality verdicts and transported outputs agree at r0 and r0 + 5", window dual_r_stability),
    law!("dual.dictionary", Some(5), 1, "downward sequences and addable-free points map to upward sequences and removable-free points", window dual_dictionary),
    law!("lang.comm_d_ab_d_a", Some(6), 50, "D_[a] and D_[a,b] commute when ε_[a] >= 2", window comm_d_ab_d_a),
    law!("lang.fact_d_ab", Some(6), 50, "D_[a,b] = D_[a+1,b]∘D_[a] when ε_[a] = 1", window fact_d_ab),
    law!("lang.comm_d_ab_d_a1", Some(6), 50, "D_[a+1] and D_[a,b] commute when D_[a+1] is finite", window comm_d_ab_d_a1),
    law!("lang.comm_d_ab_d_c", Some(6), 50, "D_[c] and D_[a,b] commute for a < c <= b", window comm_d_ab_d_c),
    law!("lang.comm_i_ab_i_a", Some(6), 50, "I_[a,b] and I_[a] commute in good range", window comm_i_ab_i_a),
    law!("lang.fact_i_ab", Some(6), 50, "I_[a,b] = I_[a]∘I_[a+1,b] when D_[a] is infinite", window fact_i_ab),
    law!("hd.nonzero", Some(7), 1, "D^Zel_[a,b] finite iff H^Zel(m) has some [a,c] with c >= b", window hd_nonzero),
    law!("hd.multiplicity", Some(7), 1, "mult of [a,b] in H^Zel(m) = ε_[a,b] - ε_[a,b+1]", window hd_multiplicity),
    law!("hd.bz_cross", Some(7), 1, "#(hd_lang(m)) = (m^#)^-", multi hd_bz_cross),
    law!("hd.sequence", Some(7), 1, "cuspidal derivatives at min..max, ε_t times each, give hd_lang(m)", multi hd_sequence),
    law!("hd.point_slice", Some(7), 1, "ε^Zel_[a,b] = #{[a,c] in H^Zel(m) : c >= b}", window hd_point_slice),
    law!("lang.eps_count", None, 1, "ε at a point equals the tds count", window lang_eps_count),
    law!("lang.point_case", None, 1, "sequence algorithms agree with the cuspidal ones at a point", window lang_point_case),
    law!("lang.window_reduction", None, 1, "D and I only see m_[a,b]", window lang_window_reduction),
    law!("calculus.size", None, 1, "size and relative length of D and I", window calculus_size),
    law!("zel.counting", None, 1, "removal chains from b-1 to c count ε^MW_[a,c] + ... + ε^MW_[b-1,c]", multi zel_counting),
    law!("zel.reduction", None, 1, "D^Zel_[a,c](m) = m^{>c} + D^Zel_[a,c](m^{<=c})", window zel_reduction),
    law!("mw.participants", None, 1, "structure and minimal linkedness of MW participants", multi mw_participants),
    law!("mw.linked_by_mapping", None, 1, "matching-based linked_by_mapping agrees with brute force", multi mw_linked_by_mapping),
    law!("mw.partner_unique", None, 1, "at most one minimally linked partner", multi mw_partner_unique),
    law!("mw.eps_mw", None, 1, "ε^MW_[x,c] = ε^Zel_[x,c] for the top end c", multi mw_eps_mw),
    law!("mw.gluing", None, 1, "minimally linked pairs glue to a minimally linked sum", multi mw_gluing),
];

fn inverse(m: &Multisegment, d: Segment, class: Classification, side: Side, p: &mut Probe) {
    p.fire();
    let up = integral(m, d, class, side);
    p.eq(|| format!("D(I(m)), I(m) = {up}"), &derivative(&up, d, class, side), &DerivOutcome::Finite(m.clone()));
    if let DerivOutcome::Finite(n) = derivative(m, d, class, side) {
        p.eq(|| format!("I(D(m)), D(m) = {n}"), &integral(&n, d, class, side), m);
    }
}

fn lang_inverse_r(m: &Multisegment, d: Segment, p: &mut Probe) {
    inverse(m, d, Lang, R, p)
}

fn lang_inverse_l(m: &Multisegment, d: Segment, p: &mut Probe) {
    inverse(m, d, Lang, L, p)
}

fn zel_inverse_r(m: &Multisegment, d: Segment, p: &mut Probe) {
    inverse(m, d, Zel, R, p)
}

fn zel_inverse_l(m: &Multisegment, d: Segment, p: &mut Probe) {
    inverse(m, d, Zel, L, p)
}

fn mw_involution(m: &Multisegment, p: &mut Probe) {
    p.fire();
    let sharp = involution(m);
    p.eq(|| format!("m^# = {sharp}"), &involution(&sharp), m);
}

fn zel_mw_oracle(m: &Multisegment, p: &mut Probe) {
    let Ok(step) = mw_step(m) else { return };
    p.fire();
    let d = step.first_segment;
    p.eq(|| format!("Δ(m) = {d}"), &zel::st_derivative_zel(m, d), &DerivOutcome::Finite(step.reduced));
}

fn cross_derivative(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let sharp = involution(m);
    for side in [R, L] {
        let lhs = derivative(m, d, Zel, side);
        let rhs = derivative(&sharp, d, Lang, side).map(|n| involution(&n));
        p.eq(|| format!("side {side}"), &lhs, &rhs);
    }
}

fn cross_integral(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let sharp = involution(m);
    for side in [R, L] {
        let lhs = integral(m, d, Zel, side);
        let rhs = involution(&integral(&sharp, d, Lang, side));
        p.eq(|| format!("side {side}"), &lhs, &rhs);
    }
}

/// For `c` the top end and `Δ(m) = [a,c]`: every `b` in `a..=c` with
/// `r = ε^MW_[a,c] + … + ε^MW_[b-1,c]`.
fn mw_ladder(m: &Multisegment) -> Vec<(i64, i64, usize)> {
    let Ok(step) = mw_step(m) else { return Vec::new() };
    let (a, c) = (step.first_segment.start(), step.first_segment.end());
    let sharp = involution(m);
    let mut r = 0;
    let mut out = Vec::new();
    for b in a..=c {
        if b > a {
            r += sharp.count(seg(b - 1, c));
        }
        out.push((b, c, r));
    }
    out
}

fn zel_multiple_mw(m: &Multisegment, p: &mut Probe) {
    for (b, c, r) in mw_ladder(m) {
        let Some(cur) = mw_iterate(m, r) else { continue };
        if mw_step(&cur).map(|s| s.first_segment) != Ok(seg(b, c)) {
            continue;
        }
        p.fire();
        let lhs = opt(mw_iterate(m, r + 1));
        let rhs = zel::st_derivative_zel(m, seg(b, c)).and_then(|n| opt(mw_iterate(&n, r)));
        p.holds(lhs == rhs && lhs.is_finite(), || format!("b = {b}, c = {c}, r = {r}"), &lhs, &rhs);
    }
}

fn zel_integral_mw(m: &Multisegment, p: &mut Probe) {
    for (b, c, r) in mw_ladder(m) {
        p.fire();
        let params = || format!("b = {b}, c = {c}, r = {r}");
        let up = zel::st_integral_zel(m, seg(b, c));
        p.eq(params, &opt(mw_iterate(&up, r + 1)), &opt(mw_iterate(m, r)));
        let lo = up.min_start().unwrap_or(b).min(m.min_start().unwrap_or(b));
        for x in lo..b {
            let d = seg(x, c);
            p.eq(|| format!("{}, ε^MW_{d}", params()), &mw::epsilon_mw(&up, d), &mw::epsilon_mw(m, d));
        }
        let first = mw_iterate(&up, r).and_then(|n| mw_step(&n).ok()).map(|s| s.first_segment.to_string());
        let first = first.unwrap_or_else(|| "none".into());
        p.eq(|| format!("{}, first segment of (D^MW)^r(I)", params()), &first, &seg(b, c).to_string());
    }
}

fn zel_counting(m: &Multisegment, p: &mut Probe) {
    for (b, c, r) in mw_ladder(m) {
        p.fire();
        let mut rest = m.clone();
        let mut chains = 0;
        while let Some(chain) = zel::removal_upward_chain(&rest, b - 1, c) {
            for s in &chain.segs {
                rest.remove(*s);
            }
            chains += 1;
        }
        p.eq(|| format!("b = {b}, c = {c}"), &chains, &r);
    }
}

fn zel_reduction(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let (low, high) = m.split_at_end(d.end());
    let rhs = zel::st_derivative_zel(&low, d).map(|n| n.sum(&high));
    p.eq(String::new, &zel::st_derivative_zel(m, d), &rhs);
}

fn r_values(m: &Multisegment, d: Segment) -> [i64; 2] {
    let r = r0(m, d);
    [r, r + 5]
}

fn size_preserved(m: &Multisegment, d: Segment) -> (Multisegment, bool) {
    let up = lang::st_integral_lang(m, d);
    let same = up.len() == m.len();
    (up, same)
}

fn dr(m: &Multisegment, r: i64) -> DerivOutcome {
    opt(dual_dr(m, r).ok())
}

fn dual_prop_i(m: &Multisegment, d: Segment, p: &mut Probe) {
    let (up, same) = size_preserved(m, d);
    if !good_range(m, d) || !same {
        return;
    }
    p.fire();
    for r in r_values(m, d) {
        let lhs = dr(m, r).and_then(|n| derivative(&n, d, Lang, L));
        let rhs = dr(&up, r);
        p.holds(lhs == rhs && lhs.is_finite(), || format!("r = {r}"), &lhs, &rhs);
    }
}

fn dual_prop_ii(m: &Multisegment, d: Segment, p: &mut Probe) {
    let (up, same) = size_preserved(m, d);
    if !good_range(m, d) || same {
        return;
    }
    p.fire();
    for r in r_values(m, d) {
        let lhs = opt(dual_dr_seg(m, r, d).ok()).and_then(|n| derivative(&n, d, Lang, L));
        let rhs = dr(&up, r);
        p.holds(lhs == rhs && lhs.is_finite(), || format!("r = {r}"), &lhs, &rhs);
    }
}

fn dual_prop_iii(m: &Multisegment, d: Segment, p: &mut Probe) {
    if !good_range(m, d) {
        return;
    }
    p.fire();
    let (_, same) = size_preserved(m, d);
    for r in r_values(m, d) {
        let finite = dr(m, r).and_then(|n| derivative(&n, d, Lang, L)).is_finite();
        p.eq(|| format!("r = {r}: |I(m)| = |m| vs D^L(D_r m) finite"), &same, &finite);
    }
}

fn dual_cuspidal(m: &Multisegment, d: Segment, p: &mut Probe) {
    if d.len() < 2 || !good_range(m, d) {
        return;
    }
    p.fire();
    let pt = Segment::point(d.start());
    let up = lang::st_integral_lang(m, pt);
    let same = up.len() == m.len();
    for r in r_values(m, d) {
        let plain = dr(m, r).and_then(|n| derivative(&n, pt, Lang, L));
        let padded = opt(dual_dr_seg(m, r, d).ok()).and_then(|n| derivative(&n, pt, Lang, L));
        let verdicts = format!("{} {} {}", same, plain.is_finite(), padded.is_finite());
        let all = format!("{same} {same} {same}");
        p.eq(|| format!("r = {r}: (i) (ii) (iii)"), &verdicts, &all);
        if same {
            p.eq(|| format!("r = {r}: D^L_[a](D_r m)"), &plain, &dr(&up, r));
            let rhs = opt(dual_dr_seg(&up, r, d).ok());
            p.eq(|| format!("r = {r}: D^L_[a](D_r^[a,b] m)"), &padded, &rhs);
        }
    }
}

fn dual_zel(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let up = integral(m, d, Zel, L);
    let same = up.len() == m.len();
    for r in r_values(m, d) {
        let lhs = dr(m, r).and_then(|n| zel::st_derivative_zel(&n, d));
        p.eq(|| format!("r = {r}: |I(m)| = |m| vs D^Zel(D_r m) finite"), &same, &lhs.is_finite());
        if same {
            p.eq(|| format!("r = {r}"), &lhs, &dr(&up, r));
        }
    }
}

/// `𝔻_r^{-1}`: `[x,y] ↦ [y+1, x+r-1]`, if every image is non-void.
fn undual(n: &Multisegment, r: i64) -> Option<Multisegment> {
    n.iter()
        .map(|s| Segment::try_new(s.end() + 1, s.start() + r - 1))
        .collect::<Option<Vec<_>>>()
        .map(Multisegment::from_segments)
}

fn duality_profile(m: &Multisegment, d: Segment, r: i64) -> String {
    let up = lang::st_integral_lang(m, d);
    let plain = dr(m, r).and_then(|n| derivative(&n, d, Lang, L));
    let padded = opt(dual_dr_seg(m, r, d).ok()).and_then(|n| derivative(&n, d, Lang, L));
    let zel_up = integral(m, d, Zel, L);
    let zel_side = dr(m, r).and_then(|n| zel::st_derivative_zel(&n, d));
    let back = |o: &DerivOutcome| o.as_finite().map_or("infinity".to_string(), |n| opt(undual(n, r)).to_string());
    format!(
        "lang |I|={} plain={} padded={} zel |I|={} zel={}",
        up.len() == m.len(),
        back(&plain),
        back(&padded),
        zel_up.len() == m.len(),
        back(&zel_side)
    )
}

fn dual_r_stability(m: &Multisegment, d: Segment, p: &mut Probe) {
    if !good_range(m, d) {
        return;
    }
    p.fire();
    let [r1, r2] = r_values(m, d);
    p.eq(|| format!("r = {r1} vs r = {r2}"), &duality_profile(m, d, r1), &duality_profile(m, d, r2));
}

fn dual_dictionary(m: &Multisegment, d: Segment, p: &mut Probe) {
    if m.is_empty() || !good_range(m, d) {
        return;
    }
    p.fire();
    let (a, b) = (d.start(), d.end());
    let r = r0(m, d);
    let Ok(image) = dual_dr(m, r) else {
        p.fail("D_r", "void image", "non-void");
        return;
    };
    let image = image.theta();
    let down = lang::downward_sequences(&m.window(a, b));
    let up = lang::upward_sequences(&image.window(-b, -a));
    let map = |s: Segment| seg(-s.start() + 1, r - s.end() - 1);
    let lhs: Vec<Vec<Segment>> = down.iter().map(|row| row.segs.iter().map(|s| map(*s)).collect()).collect();
    let rhs: Vec<Vec<Segment>> = up.iter().map(|row| row.segs.clone()).collect();
    p.eq(|| "sequence skeletons".into(), &format!("{lhs:?}"), &format!("{rhs:?}"));
    if lhs != rhs {
        return;
    }
    for (dq, uq) in down.iter().zip(&up) {
        for q in 0..dq.segs.len() {
            let (lo, hi) = dq.af(q, a);
            let af = (lo <= hi).then(|| seg(-hi, -lo));
            let rf = uq.rf(q).and_then(|s| Segment::try_new(s.start(), s.end().min(-a)));
            p.eq(|| format!("entry {} of row {:?}", q, dq.segs), &format!("{af:?}"), &format!("{rf:?}"));
        }
    }
}

fn dl(m: &Multisegment, d: Segment) -> DerivOutcome {
    lang::st_derivative_lang(m, d)
}

fn eps(m: &Multisegment, d: Segment) -> usize {
    epsilon_r(m, d, Lang, R)
}

fn then(o: &DerivOutcome, d: Segment) -> DerivOutcome {
    o.clone().and_then(|n| dl(&n, d))
}

fn comm_d_ab_d_a(m: &Multisegment, d: Segment, p: &mut Probe) {
    let pt = Segment::point(d.start());
    if d.len() < 2 || eps(m, pt) < 2 {
        return;
    }
    let (dab, da) = (dl(m, d), dl(m, pt));
    let (x, y) = (then(&dab, pt), then(&da, d));
    if dab.is_finite() || y.is_finite() {
        p.fire();
    }
    if dab.is_finite() {
        p.holds(x == y && x.is_finite(), || "(i)".into(), &x, &y);
    }
    if y.is_finite() {
        p.holds(dab.is_finite(), || "(ii)".into(), &dab, "finite");
    }
}

fn fact_d_ab(m: &Multisegment, d: Segment, p: &mut Probe) {
    let (a, b) = (d.start(), d.end());
    if d.len() < 2 || eps(m, Segment::point(a)) != 1 {
        return;
    }
    let dab = dl(m, d);
    let composite = then(&dl(m, Segment::point(a)), seg(a + 1, b));
    let second = eps(m, Segment::point(a + 1)) == 0 && composite.is_finite();
    if dab.is_finite() || second {
        p.fire();
        p.eq(|| if dab.is_finite() { "(i)".into() } else { "(ii)".into() }, &composite, &dab);
    }
}

fn comm_point(m: &Multisegment, d: Segment, c: i64, p: &mut Probe) {
    let pt = Segment::point(c);
    let (dab, dc) = (dl(m, d), dl(m, pt));
    let (x, y) = (then(&dab, pt), then(&dc, d));
    let first = dab.is_finite() && dc.is_finite();
    if first || y.is_finite() {
        p.fire();
    }
    if first {
        p.holds(x == y && x.is_finite(), || format!("(i) c = {c}"), &x, &y);
    }
    if y.is_finite() {
        p.holds(first, || format!("(ii) c = {c}"), format!("{dab} / {dc}"), "finite / finite");
    }
}

fn comm_d_ab_d_a1(m: &Multisegment, d: Segment, p: &mut Probe) {
    if d.len() < 2 || dl(m, Segment::point(d.start() + 1)).is_infinity() {
        return;
    }
    comm_point(m, d, d.start() + 1, p);
}

fn comm_d_ab_d_c(m: &Multisegment, d: Segment, p: &mut Probe) {
    for c in d.start() + 1..=d.end() {
        comm_point(m, d, c, p);
    }
}

fn comm_i_ab_i_a(m: &Multisegment, d: Segment, p: &mut Probe) {
    if d.len() < 2 || !good_range(m, d) {
        return;
    }
    p.fire();
    let pt = Segment::point(d.start());
    let lhs = lang::st_integral_lang(&lang::st_integral_lang(m, pt), d);
    let rhs = lang::st_integral_lang(&lang::st_integral_lang(m, d), pt);
    p.eq(String::new, &lhs, &rhs);
}

fn fact_i_ab(m: &Multisegment, d: Segment, p: &mut Probe) {
    let (a, b) = (d.start(), d.end());
    if d.len() < 2 || dl(m, Segment::point(a)).is_finite() {
        return;
    }
    p.fire();
    let rhs = lang::st_integral_lang(&lang::st_integral_lang(m, seg(a + 1, b)), Segment::point(a));
    p.eq(String::new, &lang::st_integral_lang(m, d), &rhs);
}

fn hd_nonzero(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let lhs = derivative_nonzero_by_hd(m, d);
    p.eq(|| format!("H^Zel(m) = {}", hd_zel(m)), &lhs, &zel::st_derivative_zel(m, d).is_finite());
}

fn hd_multiplicity(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let h = hd_zel(m);
    let wider = seg(d.start(), d.end() + 1);
    let rhs = epsilon_r(m, d, Zel, R) as i64 - epsilon_r(m, wider, Zel, R) as i64;
    p.eq(|| format!("H^Zel(m) = {h}"), &(h.count(d) as i64), &rhs);
}

fn hd_point_slice(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let h = hd_zel(m);
    let count = h.iter().filter(|s| s.start() == d.start() && s.end() >= d.end()).count();
    p.eq(|| format!("H^Zel(m) = {h}"), &epsilon_r(m, d, Zel, R), &count);
}

fn hd_bz_cross(m: &Multisegment, p: &mut Probe) {
    p.fire();
    p.eq(String::new, &involution(&hd_lang(m)), &involution(m).shrink_right_all());
}

fn hd_sequence(m: &Multisegment, p: &mut Probe) {
    let (Some(lo), Some(hi)) = (m.min_start(), m.max_end()) else { return };
    p.fire();
    let mut cur = m.clone();
    let mut trail = Vec::new();
    for t in lo..=hi {
        let e = lang::epsilon_r_point(&cur, t);
        trail.push(format!("ε_{t} = {e}"));
        for _ in 0..e {
            match lang::rho_derivative_lang(&cur, t) {
                DerivOutcome::Finite(n) => cur = n,
                DerivOutcome::Infinity => {
                    p.fail(trail.join(", "), "infinity", "finite");
                    return;
                }
            }
        }
    }
    p.eq(|| trail.join(", "), &cur, &hd_lang(m));
}

fn lang_eps_count(m: &Multisegment, d: Segment, p: &mut Probe) {
    if d.len() != 1 {
        return;
    }
    p.fire();
    p.eq(String::new, &lang::epsilon_r_point(m, d.start()), &epsilon_r(m, d, Lang, R));
}

fn lang_point_case(m: &Multisegment, d: Segment, p: &mut Probe) {
    if d.len() != 1 {
        return;
    }
    p.fire();
    let a = d.start();
    p.eq(|| "derivative".into(), &lang::st_derivative_lang_by_sequences(m, d), &lang::rho_derivative_lang(m, a));
    p.eq(|| "integral".into(), &lang::st_integral_lang_by_sequences(m, d), &lang::rho_integral_lang(m, a));
}

fn lang_window_reduction(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let w = m.window(d.start(), d.end());
    let rest = m.difference(&w).expect("window is a sub-multiset");
    let rhs = dl(&w, d).map(|n| n.sum(&rest));
    p.eq(|| format!("m_[a,b] = {w}"), &dl(m, d), &rhs);
    let rhs = lang::st_integral_lang(&w, d).sum(&rest);
    p.eq(|| format!("m_[a,b] = {w}"), &lang::st_integral_lang(m, d), &rhs);
}

fn calculus_size(m: &Multisegment, d: Segment, p: &mut Probe) {
    p.fire();
    let (n, len) = (m.len(), d.len());
    for class in [Lang, Zel] {
        for side in [R, L] {
            let tag = || format!("{class} {side}");
            let up = integral(m, d, class, side);
            let size_ok = match class {
                Lang => up.len() == n || up.len() == n + 1,
                Zel => up.len() >= n,
            };
            let ok = size_ok && up.rel_len() == m.rel_len() + len;
            p.holds(ok, || format!("{} integral", tag()), &up, "larger by ℓ(d), at most one new segment for Langlands");
            if let DerivOutcome::Finite(down) = derivative(m, d, class, side) {
                let size_ok = match class {
                    Lang => down.len() == n || down.len() + 1 == n,
                    Zel => down.len() <= n,
                };
                let ok = size_ok && down.rel_len() + len == m.rel_len();
                p.holds(
                    ok,
                    || format!("{} derivative", tag()),
                    &down,
                    "smaller by ℓ(d), at most one segment lost for Langlands",
                );
            }
        }
    }
}

fn mw_participants(m: &Multisegment, p: &mut Probe) {
    let Ok(first) = mw_step(m) else { return };
    let (a, c) = (first.first_segment.start(), first.first_segment.end());
    let mut cur = m.clone();
    let mut remaining = m.clone();
    let mut buckets: Vec<Vec<Segment>> = vec![Vec::new(); (c - a + 1) as usize];
    let mut step_no = 0;
    while cur.max_end() == Some(c) {
        step_no += 1;
        p.fire();
        let step = mw_step(&cur).expect("non-empty");
        let from_rest = mw_step(&remaining).map(|s| s.participating);
        p.eq(
            || format!("step {step_no}: participants vs MW on m minus earlier participants"),
            &format!("{:?}", step.participating),
            &format!("{:?}", from_rest.unwrap_or_default()),
        );
        for s in &step.participating {
            let k = s.end();
            if k < a || !remaining.remove(*s) {
                p.fail(format!("step {step_no}"), s, format!("a segment of m ending in [{a},{c}]"));
                return;
            }
            buckets[(k - a) as usize].push(*s);
        }
        for (i, bucket) in buckets.iter().enumerate() {
            if bucket.windows(2).any(|w| w[0].len() > w[1].len()) {
                p.fail(
                    format!("step {step_no}: MW_{} not increasing", a + i as i64),
                    format!("{bucket:?}"),
                    "increasing",
                );
            }
        }
        if buckets.windows(2).any(|w| w[0].len() > w[1].len()) {
            let sizes: Vec<usize> = buckets.iter().map(Vec::len).collect();
            p.fail(format!("step {step_no}: sizes x_a..x_c"), format!("{sizes:?}"), "non-decreasing towards c");
        }
        for k in a..c {
            let n1 = Multisegment::from_segments(buckets[(k - a) as usize].iter().copied());
            let n2 = Multisegment::from_segments(buckets[(k + 1 - a) as usize].iter().copied());
            let ok = minimally_linked(&n1, &n2, m, k + 1).unwrap_or(false);
            p.holds(
                ok,
                || format!("step {step_no}: MW_{k} and MW_{}", k + 1),
                format!("{n1} / {n2}"),
                "minimally linked",
            );
        }
        cur = step.reduced;
    }
}

/// Brute-force injection `n1 → n2` with `Δ ≺ f(Δ)`.
fn linked_brute(n1: &[Segment], n2: &[Segment], used: &mut Vec<bool>) -> bool {
    let Some((first, rest)) = n1.split_first() else { return true };
    for i in 0..n2.len() {
        if !used[i] && first.precedes(n2[i]) {
            used[i] = true;
            let ok = linked_brute(rest, n2, used);
            used[i] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

fn mw_linked_by_mapping(m: &Multisegment, p: &mut Probe) {
    for n1 in m.sub_multisets() {
        p.fire();
        let n2 = m.difference(&n1).expect("sub-multiset");
        let brute = linked_brute(n1.segments(), n2.segments(), &mut vec![false; n2.len()]);
        p.eq(|| format!("linked_by_mapping({n1}, {n2})"), &linked_by_mapping(&n1, &n2), &brute);
    }
}

fn ends(m: &Multisegment) -> Vec<i64> {
    let mut e: Vec<i64> = m.iter().map(|s| s.end()).collect();
    e.sort_unstable();
    e.dedup();
    e
}

fn mw_partner_unique(m: &Multisegment, p: &mut Probe) {
    for k in ends(m) {
        for n2 in m.slice_end(k).sub_multisets() {
            p.fire();
            let partners = mw::minimal_partners(&n2, m, k);
            p.holds(
                partners.len() <= 1,
                || format!("minimal partners of {n2} at k = {k}"),
                format!("{partners:?}"),
                "at most one",
            );
        }
    }
}

fn mw_eps_mw(m: &Multisegment, p: &mut Probe) {
    let (Some(lo), Some(c)) = (m.min_start(), m.max_end()) else { return };
    p.fire();
    let sharp = involution(m);
    for x in lo..=c {
        let d = seg(x, c);
        p.eq(|| format!("ε^MW_{d} vs ε^Zel_{d}"), &sharp.count(d), &epsilon_r(m, d, Zel, R));
    }
}

fn mw_gluing(m: &Multisegment, p: &mut Probe) {
    for k in ends(m) {
        gluing(m, k - 1, p);
    }
}

/// Splits the pieces of `m` ending at `k` and `k + 1` into two pairs and
/// checks that minimal linkedness of each pair in its own ambient
/// multisegment glues to the sum.
fn gluing(m: &Multisegment, k: i64, p: &mut Probe) {
    let (low, high) = (m.slice_end(k), m.slice_end(k + 1));
    for big_k in low.sub_multisets() {
        for big_k1 in high.sub_multisets() {
            let base = m.difference(&big_k).and_then(|x| x.difference(&big_k1)).expect("sub-multisets");
            for pk in big_k.sub_multisets() {
                let qk = big_k.difference(&pk).expect("sub-multiset");
                for pk1 in big_k1.sub_multisets() {
                    let qk1 = big_k1.difference(&pk1).expect("sub-multiset");
                    if pk1.is_empty() || qk1.is_empty() || pk.len() > pk1.len() || qk.len() > qk1.len() {
                        continue;
                    }
                    let left = base.sum(&pk).sum(&pk1);
                    let right = base.sum(&qk).sum(&qk1);
                    let hyp = minimally_linked(&pk, &pk1, &left, k + 1).unwrap_or(false)
                        && minimally_linked(&qk, &qk1, &right, k + 1).unwrap_or(false);
                    if !hyp {
                        continue;
                    }
                    p.fire();
                    let ok = minimally_linked(&big_k, &big_k1, m, k + 1).unwrap_or(false);
                    p.holds(
                        ok,
                        || format!("gluing at k = {k}: ({pk}, {pk1}) + ({qk}, {qk1}) over {base}"),
                        format!("{big_k} / {big_k1}"),
                        "minimally linked",
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|l| l.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
