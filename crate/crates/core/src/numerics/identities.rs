//! Named identities, each checked exactly or numerically.
//!
//! A numeric check evaluates both sides independently and passes when the
//! rigorous bound on `|lhs - rhs|` is below `10^-(digits - 5)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::closed_forms::{
    bbb_coefficient, eu127_matrix, eu128_matrix, eu129_matrix, th7_coeffs, th8_coeffs, twos_around, zagier_coeffs,
};
use super::constants::{l_chi3_bits, pi_bits, sqrt3_bits, zeta_bits};
use super::sigma::{sigma_lin_bits, sigma_tail_bits};
use super::zeta::ZetaTailEvaluator;
use super::{bits_for, check_digits, ApproxReal};
use crate::compositions::{classes, Composition, DualityClass};
use crate::delta::families::{self, ClosedFamily, FamilyPair};
use crate::delta::DeltaEngine;
use crate::error::{Error, Result};
use crate::lincomb::{parse_rational, LinComb, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Exact,
    Numeric,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Exact => "exact",
            CheckKind::Numeric => "numeric",
        })
    }
}

/// One comparison inside a report.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub kind: CheckKind,
    /// Upper bound on `|lhs - rhs|`; 0 or 1 for exact checks.
    pub residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub name: String,
    pub params: Vec<u32>,
    pub digits: u32,
    pub tolerance: f64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().filter(|c| c.kind == CheckKind::Numeric).map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.name,
            "params": self.params,
            "digits": self.digits,
            "tolerance": format!("{:.2e}", self.tolerance),
            "passed": self.passed(),
            "max_residual": format!("{:.3e}", self.max_residual()),
            "checks": self.checks.iter().map(|c| json!({
                "label": c.label,
                "kind": c.kind.to_string(),
                "residual": format!("{:.3e}", c.residual),
                "passed": c.passed,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Registry entry.
#[derive(Clone, Copy, Debug)]
pub struct IdentityInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static str,
}

const REGISTRY: &[IdentityInfo] = &[
    IdentityInfo { name: "euler", summary: "zeta(2) = 3 sigma(2)", params: "" },
    IdentityInfo { name: "zeta3", summary: "zeta(3)_{n,n} = 2 sigma(3)_n + 3 sigma(2,1)_n", params: "[n]" },
    IdentityInfo { name: "weight4", summary: "sigma(4), sigma(2,2) and 2 sigma(3,1) + 3 sigma(2,1,1) against pi^4", params: "" },
    IdentityInfo { name: "sigma-twos", summary: "sigma(2^r) = pi^2r / (3^2r (2r)!)", params: "[r_max=5]" },
    IdentityInfo { name: "sigma-one-twos", summary: "sigma(1, 2^{r-1}) = pi^{2r-1} / (3^{2r-1} (2r-1)! sqrt3)", params: "[r_max=4]" },
    IdentityInfo { name: "eu87", summary: "the two integer relations among weight-5 sigma values", params: "" },
    IdentityInfo { name: "eu88", summary: "4 sigma(4,1) = 6 sigma(2,2,1) + 22 sigma(3,1,1) + 33 sigma(2,1,1,1)", params: "" },
    IdentityInfo { name: "zucker", summary: "sigma(3) and sigma(2,1) in terms of L(2) and zeta(3)", params: "" },
    IdentityInfo { name: "ct2", summary: "zeta(a) = 2 sum_b sigma(b,1..1) + 3 sigma(2,1..1)", params: "[a_max=8]" },
    IdentityInfo { name: "th7", summary: "sigma(2^a,1,2^b) closed form", params: "[a b] (default: weight <= 9)" },
    IdentityInfo { name: "th8", summary: "sigma(2^a,3,2^b) closed form", params: "[a b] (default: weight <= 9)" },
    IdentityInfo { name: "zagier", summary: "zeta(2^a,3,2^b) closed form", params: "[a b] (default: weight <= 9)" },
    IdentityInfo { name: "bbb", summary: "zeta(k) = -sum_even (-3)^depth sigma(a)", params: "[k ...] (default 4 6 8)" },
    IdentityInfo { name: "leshchiner", summary: "2(1-2^{1-k}) zeta(k) against sigma(2^m) and sigma(2c,2..2)", params: "[k ...] (default 4 6 8)" },
    IdentityInfo { name: "all-twos", summary: "zeta([2^m])_{n,n} over compositions in {2,4}", params: "[m_max=4 n ...] (default n = 0 2)" },
    IdentityInfo { name: "th17", summary: "delta(sum (-1)^depth 4^{height-1} [a]) and its numeric value", params: "[r_max=4]" },
    IdentityInfo { name: "th18", summary: "polynomial t family and its specialisations", params: "[k_max=10]" },
    IdentityInfo { name: "bbb-coeffs", summary: "coefficients of zeta(k) for t = -1/2", params: "[k_max=12]" },
    IdentityInfo { name: "t1-spotcheck", summary: "zeta(c)_{n,n} = sigma(delta(c))_n for every class", params: "[k_max=6 n ...] (default n = 0 1 3)" },
    IdentityInfo { name: "eu127", summary: "weight-5 sigma matrix: exact entries and contraction", params: "" },
    IdentityInfo { name: "eu128", summary: "weight-5 zeta matrix: exact entries and contraction", params: "" },
    IdentityInfo { name: "eu129", summary: "derived weight-5 sigma matrix: exact entries and contraction", params: "" },
    IdentityInfo { name: "families", summary: "closed delta families at small parameters, exact", params: "" },
];

pub fn registry() -> &'static [IdentityInfo] {
    REGISTRY
}

/// Accumulates checks at a fixed precision.
struct Ctx {
    digits: u32,
    prec: u32,
    tolerance: BigRational,
    checks: Vec<Check>,
}

impl Ctx {
    fn numeric(&mut self, label: impl Into<String>, lhs: &ApproxReal, rhs: &ApproxReal) {
        let bound = lhs.sub(rhs).magnitude_bound();
        let passed = bound < self.tolerance;
        self.checks.push(Check {
            label: label.into(),
            kind: CheckKind::Numeric,
            residual: bound.to_f64().unwrap_or(f64::INFINITY),
            passed,
        });
    }

    fn exact(&mut self, label: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            label: label.into(),
            kind: CheckKind::Exact,
            residual: if ok { 0.0 } else { 1.0 },
            passed: ok,
        });
    }

    fn sigma(&self, a: &str) -> ApproxReal {
        sigma_tail_bits(&comp(a), 0, self.prec)
    }

    fn sigma_lin<R: Ring + Into<BigRational>>(&self, l: &LinComb<Composition, R>, n: u64) -> ApproxReal {
        sigma_lin_bits(l, n, self.prec)
    }

    fn zeta(&self, s: u32) -> ApproxReal {
        zeta_bits(s, self.prec)
    }

    fn pi_pow(&self, e: u32) -> ApproxReal {
        pi_bits(self.prec).powi(e)
    }
}

fn comp(s: &str) -> Composition {
    s.parse().expect("literal composition")
}

fn q(s: &str) -> BigRational {
    parse_rational(s).expect("literal rational")
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn fact(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn lin(terms: &[(i64, &str)]) -> LinComb<Composition, BigInt> {
    terms.iter().map(|&(c, a)| (comp(a), int(c))).collect()
}

/// `zeta(l)_{n,n}` for a combination of classes.
fn zeta_classes<R: Ring + Into<BigRational>>(ev: &ZetaTailEvaluator, l: &LinComb<DualityClass, R>, n: u64) -> ApproxReal {
    l.iter().fold(ApproxReal::zero(ev.prec()), |acc, (c, x)| acc.add(&ev.tail(c, n).mul_rational(&x.clone().into())))
}

fn params_or<'a>(params: &'a [u32], default: &'a [u32]) -> &'a [u32] {
    if params.is_empty() {
        default
    } else {
        params
    }
}

/// Run the identity `name` at `digits` decimal digits.
pub fn verify(name: &str, params: &[u32], digits: u32) -> Result<VerifyReport> {
    check_digits(digits)?;
    if digits < 10 {
        return Err(Error::Config(format!("verification needs at least 10 digits, got {digits}")));
    }
    let prec = bits_for(digits);
    let tolerance = BigRational::new(int(1), num_traits::pow(int(10), (digits - 5) as usize));
    let mut ctx = Ctx { digits, prec, tolerance, checks: Vec::new() };
    match name {
        "euler" => {
            let lhs = ctx.zeta(2);
            let rhs = ctx.sigma("2").mul_int(&int(3));
            ctx.numeric("zeta(2) = 3 sigma(2)", &lhs, &rhs);
        }
        "zeta3" => {
            let n = u64::from(params.first().copied().unwrap_or(0));
            let ev = ZetaTailEvaluator::with_bits(prec, n);
            let lhs = ev.tail(&DualityClass::of(&comp("3"))?, n);
            let rhs = ctx.sigma_lin(&lin(&[(2, "3"), (3, "2,1")]), n);
            ctx.numeric(format!("zeta(3)_{{{n},{n}}} = 2 sigma(3)_{n} + 3 sigma(2,1)_{n}"), &lhs, &rhs);
        }
        "weight4" => {
            let pi4 = ctx.pi_pow(4);
            ctx.numeric("sigma(4) = 17 pi^4 / 3240", &ctx.sigma("4"), &pi4.mul_rational(&q("17/3240")));
            ctx.numeric("sigma(2,2) = pi^4 / 1944", &ctx.sigma("2,2"), &pi4.mul_rational(&q("1/1944")));
            let l = ctx.sigma_lin(&lin(&[(2, "3,1"), (3, "2,1,1")]), 0);
            ctx.numeric("2 sigma(3,1) + 3 sigma(2,1,1) = pi^4 / 1620", &l, &pi4.mul_rational(&q("1/1620")));
        }
        "sigma-twos" => {
            let r_max = params.first().copied().unwrap_or(5);
            for r in 1..=r_max {
                let a = Composition::new(&vec![2; r as usize])?;
                let want = ctx.pi_pow(2 * r).div_int(&(num_traits::pow(int(3), 2 * r as usize) * fact(2 * r)));
                ctx.numeric(format!("sigma(2^{r})"), &sigma_tail_bits(&a, 0, prec), &want);
            }
        }
        "sigma-one-twos" => {
            let r_max = params.first().copied().unwrap_or(4);
            for r in 1..=r_max {
                let mut e = vec![1u32];
                e.extend(vec![2; (r - 1) as usize]);
                let a = Composition::new(&e)?;
                let want = ctx
                    .pi_pow(2 * r - 1)
                    .div_int(&(num_traits::pow(int(3), (2 * r - 1) as usize) * fact(2 * r - 1)))
                    .div(&sqrt3_bits(prec));
                ctx.numeric(format!("sigma({a})"), &sigma_tail_bits(&a, 0, prec), &want);
            }
        }
        "eu87" => {
            let first = lin(&[
                (1, "5"),
                (-1, "4,1"),
                (-6, "3,2"),
                (-4, "3,1,1"),
                (-6, "2,3"),
                (-9, "2,2,1"),
                (-9, "2,1,2"),
                (-6, "2,1,1,1"),
            ]);
            let second =
                lin(&[(1, "5"), (-11, "4,1"), (-10, "3,2"), (-30, "3,1,1"), (-21, "2,2,1"), (-15, "2,1,2"), (-45, "2,1,1,1")]);
            let zero = ApproxReal::zero(prec);
            ctx.numeric("first weight-5 relation", &ctx.sigma_lin(&first, 0), &zero);
            ctx.numeric("second weight-5 relation", &ctx.sigma_lin(&second, 0), &zero);
            // both come from relations between zeta values through delta
            let engine = DeltaEngine::global();
            let d = |s: &str| -> LinComb<Composition, BigInt> {
                (*engine.class(&DualityClass::of(&comp(s)).expect("admissible"))).clone()
            };
            let rel1 = d("5").sub(&d("4,1")).sub(&d("3,2")).sub(&d("2,3"));
            let rel2 = d("4,1").scale(&int(5)).add(&d("3,2")).sub(&d("2,3"));
            ctx.exact("first relation is delta of the first zeta relation", rel1 == first);
            ctx.exact("second relation lies in the span of both delta images", in_span(&[&rel1, &rel2], &second));
        }
        "eu88" => {
            let l = lin(&[(4, "4,1"), (-6, "2,2,1"), (-22, "3,1,1"), (-33, "2,1,1,1")]);
            ctx.numeric("4 sigma(4,1) = 6 sigma(2,2,1) + 22 sigma(3,1,1) + 33 sigma(2,1,1,1)", &ctx.sigma_lin(&l, 0), &ApproxReal::zero(prec));
        }
        "zucker" => {
            let pl = pi_bits(prec).mul(&sqrt3_bits(prec)).mul(&l_chi3_bits(2, prec));
            let z3 = ctx.zeta(3);
            let s3 = pl.mul_rational(&q("1/2")).sub(&z3.mul_rational(&q("4/3")));
            ctx.numeric("sigma(3) = (pi sqrt3 / 2) L(2) - (4/3) zeta(3)", &ctx.sigma("3"), &s3);
            let s21 = pl.mul_rational(&q("-1/3")).add(&z3.mul_rational(&q("11/9")));
            ctx.numeric("sigma(2,1) = -(pi sqrt3 / 3) L(2) + (11/9) zeta(3)", &ctx.sigma("2,1"), &s21);
        }
        "ct2" => {
            let a_max = params.first().copied().unwrap_or(8);
            for a in 2..=a_max {
                let mut rhs = LinComb::zero();
                for b in 3..=a {
                    rhs.add_term(crate::delta::hook(b, a - b)?, int(2));
                }
                rhs.add_term(crate::delta::hook(2, a - 2)?, int(3));
                ctx.numeric(format!("zeta({a})"), &ctx.zeta(a), &ctx.sigma_lin(&rhs, 0));
            }
        }
        "th7" | "th8" | "zagier" => closed_form_checks(&mut ctx, name, params)?,
        "bbb" => {
            for &k in params_or(params, &[4, 6, 8]) {
                let pair = families::even_alternating(k)?;
                let rhs = ctx.sigma_lin(&pair.rhs, 0).neg();
                ctx.numeric(format!("zeta({k}) = -sum (-3)^depth sigma(a)"), &ctx.zeta(k), &rhs);
            }
        }
        "leshchiner" => {
            for &k in params_or(params, &[4, 6, 8]) {
                let pair = families::leshchiner(k)?;
                let factor = BigRational::from_integer(int(2)) * (BigRational::from_integer(int(1)) - BigRational::new(int(1), int(1) << (k - 1)));
                let lhs = ctx.zeta(k).mul_rational(&factor);
                ctx.numeric(format!("2(1 - 2^{{1-{k}}}) zeta({k})"), &lhs, &ctx.sigma_lin(&pair.rhs, 0));
                let ev = ZetaTailEvaluator::with_bits(prec, 0);
                ctx.numeric(format!("alternating hook sum of weight {k}"), &zeta_classes(&ev, &pair.lhs, 0), &lhs);
            }
        }
        "all-twos" => {
            let m_max = params.first().copied().unwrap_or(4);
            let ns: Vec<u64> = if params.len() > 1 { params[1..].iter().map(|&x| u64::from(x)).collect() } else { vec![0, 2] };
            let ev = ZetaTailEvaluator::with_bits(prec, ns.iter().copied().max().unwrap_or(0));
            for m in 1..=m_max {
                let pair = families::all_twos(m)?;
                for &n in &ns {
                    let lhs = zeta_classes(&ev, &pair.lhs, n);
                    ctx.numeric(format!("zeta([2^{m}])_{{{n},{n}}}"), &lhs, &ctx.sigma_lin(&pair.rhs, n));
                }
                let closed = ctx.pi_pow(2 * m).div_int(&fact(2 * m + 1));
                ctx.numeric(format!("zeta(2^{m}) = pi^{} / {}!", 2 * m, 2 * m + 1), &ctx.sigma_lin(&pair.rhs, 0), &closed);
            }
        }
        "th17" => {
            let r_max = params.first().copied().unwrap_or(4);
            let ev = ZetaTailEvaluator::with_bits(prec, 0);
            for r in 1..=r_max {
                let pair = families::selfdual_t4(r)?;
                ctx.exact(format!("delta identity at r = {r}"), pair.holds());
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let want = ctx.pi_pow(2 * r).mul_rational(&BigRational::new(int(sign), int(3) * fact(2 * r)));
                ctx.numeric(format!("weighted zeta sum at r = {r}"), &zeta_classes(&ev, &pair.lhs, 0), &want);
            }
        }
        "th18" => th18_checks(&mut ctx, params.first().copied().unwrap_or(10))?,
        "bbb-coeffs" => bbb_coeff_checks(&mut ctx, params.first().copied().unwrap_or(12))?,
        "t1-spotcheck" => {
            let k_max = params.first().copied().unwrap_or(6);
            let ns: Vec<u64> = if params.len() > 1 { params[1..].iter().map(|&x| u64::from(x)).collect() } else { vec![0, 1, 3] };
            let all: Vec<DualityClass> = (0..=k_max).flat_map(classes).collect();
            ctx.checks.extend(t1_checks(&all, &ns, digits));
        }
        "eu127" => matrix_checks(&mut ctx, 127)?,
        "eu128" => matrix_checks(&mut ctx, 128)?,
        "eu129" => matrix_checks(&mut ctx, 129)?,
        "families" => family_checks(&mut ctx)?,
        _ => return Err(Error::Domain(format!("unknown identity {name:?}"))),
    }
    let tolerance = ctx.tolerance.to_f64().unwrap_or(0.0);
    Ok(VerifyReport { name: name.to_string(), params: params.to_vec(), digits: ctx.digits, tolerance, checks: ctx.checks })
}

/// `zeta(c)_{n,n}` against `sigma(delta(c))_n` for the given classes,
/// evaluated in parallel.
pub fn t1_checks(cls: &[DualityClass], ns: &[u64], digits: u32) -> Vec<Check> {
    let prec = bits_for(digits);
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let ev = ZetaTailEvaluator::with_bits(prec, n_max);
    let tolerance = BigRational::new(int(1), num_traits::pow(int(10), digits.saturating_sub(5) as usize));
    let engine = DeltaEngine::global();
    cls.par_iter()
        .flat_map_iter(|c| {
            let d = engine.class(c);
            let ev = &ev;
            let tolerance = &tolerance;
            ns.iter().map(move |&n| {
                let bound = ev.tail(c, n).sub(&sigma_lin_bits(&d, n, prec)).magnitude_bound();
                Check {
                    label: format!("[{}] at n = {n}", c.representative()),
                    kind: CheckKind::Numeric,
                    residual: bound.to_f64().unwrap_or(f64::INFINITY),
                    passed: bound < *tolerance,
                }
            })
        })
        .collect()
}

fn closed_form_checks(ctx: &mut Ctx, name: &str, params: &[u32]) -> Result<()> {
    let pairs: Vec<(u32, u32)> = match params {
        [a, b] => vec![(*a, *b)],
        [] => {
            let (lo, span) = match name {
                "th7" => (1, 4),
                _ => (0, 3),
            };
            (lo..=span).flat_map(|a| (0..=span - a).map(move |b| (a, b))).collect()
        }
        _ => return Err(Error::Parse(format!("{name} takes two parameters a b"))),
    };
    let ev = ZetaTailEvaluator::with_bits(ctx.prec, 0);
    for (a, b) in pairs {
        let (v, direct, label) = match name {
            "th7" => {
                let c = twos_around(a, 1, b);
                (th7_coeffs(a, b)?, sigma_tail_bits(&c, 0, ctx.prec), format!("sigma({c})"))
            }
            "th8" => {
                let c = twos_around(a, 3, b);
                (th8_coeffs(a, b)?, sigma_tail_bits(&c, 0, ctx.prec), format!("sigma({c})"))
            }
            _ => {
                let c = twos_around(a, 3, b);
                (zagier_coeffs(a, b)?, ev.tail(&DualityClass::of(&c)?, 0), format!("zeta({c})"))
            }
        };
        ctx.numeric(label, &v.contract_bits(ctx.prec), &direct);
    }
    Ok(())
}

fn rows(lits: &[&[&str]]) -> Vec<Vec<BigRational>> {
    lits.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
}

/// The weight-5 matrices as printed.
pub fn printed_matrix(which: u32) -> Option<Vec<Vec<BigRational>>> {
    Some(match which {
        127 => rows(&[
            &["1/108", "-3/8", "1/27", "29/27"],
            &["0", "-9/8", "-2/27", "58/9"],
            &["0", "1/3", "1/6", "-575/162"],
            &["-1/162", "1", "-8/81", "-575/162"],
        ]),
        128 => rows(&[&["0", "1"], &["-1/6", "2"], &["1/2", "-11/2"], &["-1/3", "9/2"]]),
        129 => rows(&[&["9/8", "1/9", "-19/3"], &["-7/8", "-1/18", "134/27"], &["-1/2", "-1/9", "101/27"]]),
        _ => return None,
    })
}

fn matrix_checks(ctx: &mut Ctx, which: u32) -> Result<()> {
    let derived = match which {
        127 => eu127_matrix(),
        128 => eu128_matrix(),
        _ => eu129_matrix()?,
    };
    let printed = printed_matrix(which).expect("known matrix");
    for (i, (d, p)) in derived.iter().zip(&printed).enumerate() {
        ctx.exact(format!("row {} matches the printed entries", i + 1), d == p);
    }
    let prec = ctx.prec;
    let pi = pi_bits(prec);
    let s3 = sqrt3_bits(prec);
    let pl = |r: u32| pi.powi(5 - 2 * r).mul(&s3).mul(&l_chi3_bits(2 * r, prec));
    let pz = |r: u32| pi.powi(4 - 2 * r).mul(&zeta_bits(2 * r + 1, prec));
    let (basis, lhs): (Vec<ApproxReal>, Vec<ApproxReal>) = match which {
        127 => (
            vec![pl(1), pl(2), pz(1), pz(2)],
            ["3,2", "2,3", "2,2,1", "2,1,2"].iter().map(|a| ctx.sigma(a)).collect(),
        ),
        128 => {
            let ev = ZetaTailEvaluator::with_bits(prec, 0);
            let lhs = ["5", "4,1", "3,2", "2,3"]
                .iter()
                .map(|a| ev.tail(&DualityClass::of(&comp(a)).expect("admissible"), 0))
                .collect();
            (vec![pz(1), pz(2)], lhs)
        }
        _ => {
            // 2 sigma(3,1,1) + 2 sigma(2,1,1,1) does not match this row; the
            // equations only fix 2 sigma(3,1,1) + 3 sigma(2,1,1,1)
            let third = ctx.sigma_lin(&lin(&[(2, "3,1,1"), (3, "2,1,1,1")]), 0);
            (vec![pl(2), pz(1), pz(2)], vec![ctx.sigma("5"), ctx.sigma("4,1"), third])
        }
    };
    for (i, (row, l)) in printed.iter().zip(&lhs).enumerate() {
        let r = row.iter().zip(&basis).fold(ApproxReal::zero(prec), |acc, (c, b)| acc.add(&b.mul_rational(c)));
        ctx.numeric(format!("row {} contracts to its left side", i + 1), l, &r);
    }
    Ok(())
}

fn th18_checks(ctx: &mut Ctx, k_max: u32) -> Result<()> {
    for k in (0..=k_max).step_by(2) {
        let pair = families::t_family(k)?;
        ctx.exact(format!("polynomial identity at k = {k}"), pair.holds());
        if k < 2 {
            continue;
        }
        let at = |t: i64| families::t_family_at(k, t);
        let th9 = families::even_alternating(k)?;
        ctx.exact(format!("t = 1 gives the alternating even family at k = {k}"), at(1)? == th9);
        let th17 = families::selfdual_t4(k / 2)?;
        let four = FamilyPair { lhs: th17.lhs.scale(&int(4)), rhs: th17.rhs.scale(&int(4)) };
        ctx.exact(format!("t = 4 gives four times the self-dual family at k = {k}"), at(4)? == four);
        ctx.exact(format!("t = -1 matches the displayed formula at k = {k}"), at(-1)? == families::t_minus_one_displayed(k)?);
        ctx.exact(format!("t = -2 matches the displayed formula at k = {k}"), at(-2)? == families::t_minus_two_displayed(k)?);
        let half = families::t_family_at_rational(k, &q("-1/2"))?;
        ctx.exact(format!("t = -1/2 matches the displayed formula at k = {k}"), half == families::t_minus_half_displayed(k)?);
    }
    Ok(())
}

fn bbb_coeff_checks(ctx: &mut Ctx, k_max: u32) -> Result<()> {
    let printed = [
        (4, "17/16"),
        (6, "163/128"),
        (8, "1373/1024"),
        (10, "11143/8192"),
        (12, "61835987/45285376"),
    ];
    for (k, v) in printed.iter().filter(|(k, _)| *k <= k_max) {
        ctx.exact(format!("c_{k} = {v}"), bbb_coefficient(*k)? == q(v));
    }
    // the sigma combinations listed for k <= 10, each times 9/4
    let listed: [(u32, &[(&str, &str)]); 4] = [
        (4, &[("1", "4")]),
        (6, &[("1", "6"), ("3/2", "2,4")]),
        (8, &[("1", "8"), ("9/4", "4,4"), ("3/2", "2,6")]),
        (10, &[("1", "10"), ("9/4", "6,4"), ("3/2", "2,8"), ("9/4", "4,6"), ("27/8", "2,4,4")]),
    ];
    for (k, terms) in listed.iter().filter(|(k, _)| *k <= k_max) {
        let pair = families::t_minus_half_displayed(*k)?;
        let rhs: LinComb<Composition, BigRational> =
            terms.iter().map(|(c, a)| (comp(a), q(c) * q("9/4"))).collect();
        let even_part: LinComb<Composition, BigRational> =
            pair.rhs.iter().filter(|(b, _)| !b.is_empty()).map(|(b, c)| (b.clone(), c.clone())).collect();
        ctx.exact(format!("listed combination at k = {k}"), rhs == even_part);
    }
    let ev = ZetaTailEvaluator::with_bits(ctx.prec, 0);
    for k in (4..=k_max.min(10)).step_by(2) {
        let pair = families::t_minus_half_displayed(k)?;
        let ck = bbb_coefficient(k)?;
        let z = ctx.zeta(k).mul_rational(&ck);
        ctx.numeric(format!("sigma side equals c_{k} zeta({k})"), &ctx.sigma_lin(&pair.rhs, 0), &z);
        ctx.numeric(format!("zeta side equals c_{k} zeta({k})"), &zeta_classes(&ev, &pair.lhs, 0), &z);
    }
    Ok(())
}

fn family_checks(ctx: &mut Ctx) -> Result<()> {
    let specs = [
        "even_alternating:6",
        "even_alternating:8",
        "all_twos:4",
        "leshchiner:8",
        "a_repeated:3,3",
        "a_repeated:4,2",
        "height_one:2,4",
        "height_one:3,3",
        "two_ones_v:3,4",
        "t_family:8",
        "selfdual_t4:4",
    ];
    for s in specs {
        let f: ClosedFamily = s.parse()?;
        ctx.exact(f.to_string(), f.holds()?);
    }
    Ok(())
}

/// Whether `target` is a rational combination of `gens`.
fn in_span(gens: &[&LinComb<Composition, BigInt>], target: &LinComb<Composition, BigInt>) -> bool {
    let mut support: Vec<&Composition> = gens.iter().flat_map(|g| g.support()).chain(target.support()).collect();
    support.sort();
    support.dedup();
    let dense = |l: &LinComb<Composition, BigInt>| -> Vec<BigRational> {
        support.iter().map(|b| BigRational::from_integer(l.coefficient_of(b))).collect()
    };
    let m: Vec<Vec<BigRational>> = gens.iter().map(|g| dense(g)).collect();
    super::closed_forms::row_combination(&m, &dense(target)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_and_zucker() {
        for name in ["euler", "zeta3", "zucker", "eu88"] {
            let r = verify(name, &[], 30).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.checks);
        }
        assert!(verify("nope", &[], 30).is_err());
        assert!(matches!(verify("euler", &[], 500), Err(Error::Config(_))));
    }
}
