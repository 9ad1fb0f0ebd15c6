use std::path::Path;

use fcompare_core::comparison::{compare, lower_bound_cs, ratio_chain, sandwich_simplicial};
use fcompare_core::exact::json;
use fcompare_core::lattice::{gv_scan, verify_phi_with};
use fcompare_core::macaulay::{m_sequence_violation, macaulay_violation};
use fcompare_core::minors::scan_minors;
use fcompare_core::{
    f_to_g, f_to_h, g_to_f, g_to_h, h_to_f, h_to_g, is_dehn_sommerville, Dimension, ExactInt, Execution, FVector,
    Family, FamilySpec, GVector, HVector, MinorOrder,
};
use serde::Serialize;

use crate::error::CliError;
use crate::input::{parse_int_str, parse_vector, read_source, resolve_d, VecKind, VectorInput};
use crate::{
    BoundsArgs, BoundsKind, CheckArgs, CheckKind, Cli, Command, CompareArgs, Emit, FamilyArg, FamilyArgs, Output,
    TransformArgs, VecSource, VerifyCommand,
};

type Res = Result<Output, CliError>;

fn emit<T: Serialize>(value: &T, holds: bool) -> Res {
    let json = serde_json::to_string(value).map_err(|e| CliError::validation(e.to_string()))?;
    Ok(Output { json, holds })
}

pub fn dispatch(cli: Cli) -> Res {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match cli.command {
        Command::Transform(a) => transform(a),
        Command::Family(a) => family(a),
        Command::Check(a) => check(a),
        Command::Compare(a) => compare_cmd(a),
        Command::Bounds(a) => bounds(a),
        Command::Verify(v) => verify(v, exec),
    }
}

fn load(source: &VecSource) -> Result<VectorInput, CliError> {
    parse_vector(&read_source(source.vec.as_deref(), source.file.as_deref())?)
}

fn dimension(d: Option<i64>) -> Result<Dimension, CliError> {
    let d = d.ok_or_else(|| CliError::usage("the dimension is required: pass --d or a payload with \"d\""))?;
    Ok(Dimension::new(d)?)
}

fn check_kind(input: &VectorInput, expected: VecKind) -> Result<(), CliError> {
    match input.kind {
        Some(k) if k != expected => Err(CliError::validation(format!(
            "payload carries a {}-vector but {} was requested",
            k.key(),
            expected.key()
        ))),
        _ => Ok(()),
    }
}

fn is_negative(x: &ExactInt) -> bool {
    *x < ExactInt::from(0)
}

fn transform(a: TransformArgs) -> Res {
    let input = load(&a.source)?;
    check_kind(&input, a.from)?;
    let dim = dimension(resolve_d(a.d, input.d)?)?;
    let entries = input.entries;
    let require_palindromic = |h: &HVector| {
        if is_dehn_sommerville(h) {
            Ok(())
        } else {
            Err(CliError::validation(
                "h-vector is not palindromic, so no g-vector describes it",
            ))
        }
    };
    match a.from {
        VecKind::F => {
            if let Some(x) = entries.iter().find(|x| is_negative(x)) {
                return Err(CliError::validation(format!(
                    "face numbers must be nonnegative, got {x}"
                )));
            }
            let f = FVector::new(dim, entries)?;
            match a.to {
                VecKind::F => emit(&f, true),
                VecKind::H => emit(&f_to_h(&f), true),
                VecKind::G => {
                    require_palindromic(&f_to_h(&f))?;
                    emit(&f_to_g(&f), true)
                }
            }
        }
        VecKind::H => {
            let h = HVector::new(dim, entries)?;
            match a.to {
                VecKind::F => emit(&h_to_f(&h), true),
                VecKind::H => emit(&h, true),
                VecKind::G => {
                    require_palindromic(&h)?;
                    emit(&h_to_g(&h)?, true)
                }
            }
        }
        VecKind::G => {
            let g = GVector::new(dim, entries)?;
            match a.to {
                VecKind::F => emit(&g_to_f(&g), true),
                VecKind::H => emit(&g_to_h(&g), true),
                VecKind::G => emit(&g, true),
            }
        }
    }
}

fn family(a: FamilyArgs) -> Res {
    let fam = match a.family {
        FamilyArg::Cyclic => Family::Cyclic,
        FamilyArg::Stacked => Family::Stacked,
        FamilyArg::CsStacked => Family::CsStacked,
    };
    let spec = FamilySpec::new(fam, a.n, Dimension::new(a.d)?)?;
    match a.emit {
        Emit::F => emit(&spec.f_vector(), true),
        Emit::G => emit(&spec.g_vector(), true),
    }
}

#[derive(Serialize)]
struct CheckResult<W: Serialize> {
    result: bool,
    witness: Option<W>,
}

fn check_result<W: Serialize>(witness: Option<W>) -> Res {
    let result = witness.is_none();
    emit(&CheckResult { result, witness }, result)
}

#[derive(Serialize)]
struct NegativeEntry {
    index: usize,
    #[serde(serialize_with = "json::int")]
    value: ExactInt,
}

#[derive(Serialize)]
struct AsymmetricPair {
    i: usize,
    #[serde(serialize_with = "json::int")]
    h_i: ExactInt,
    #[serde(serialize_with = "json::int")]
    h_d_minus_i: ExactInt,
}

fn check(a: CheckArgs) -> Res {
    let input = load(&a.source)?;
    let d = resolve_d(a.d, input.d)?;
    let v = input.entries;
    let len = v.len();
    let length_error = |expected: String| CliError::validation(format!("expected {expected}, got length {len}"));
    match a.kind {
        CheckKind::MSequence | CheckKind::MacaulaySequence => {
            if let Some(d) = d {
                let dim = Dimension::new(d)?;
                if len != dim.delta() + 1 {
                    return Err(length_error(format!("a g-vector of length {}", dim.delta() + 1)));
                }
            }
            if matches!(a.kind, CheckKind::MSequence) {
                check_result(m_sequence_violation(&v)?)
            } else {
                check_result(macaulay_violation(&v)?)
            }
        }
        CheckKind::Nonnegative => {
            if let Some(d) = d {
                let dim = Dimension::new(d)?;
                if ![dim.d(), dim.d() + 1, dim.delta() + 1].contains(&len) {
                    return Err(length_error(format!(
                        "an f-, h- or g-vector of length {}, {} or {}",
                        dim.d(),
                        dim.d() + 1,
                        dim.delta() + 1
                    )));
                }
            }
            let witness = v.iter().position(is_negative).map(|index| NegativeEntry {
                index,
                value: v[index].clone(),
            });
            check_result(witness)
        }
        CheckKind::DehnSommerville => {
            check_kind(
                &VectorInput {
                    d: None,
                    kind: input.kind,
                    entries: vec![],
                },
                VecKind::H,
            )?;
            let d = d.unwrap_or(len as i64 - 1);
            let h = HVector::new(Dimension::new(d)?, v)?;
            if is_dehn_sommerville(&h) {
                return check_result(None::<AsymmetricPair>);
            }
            let e = h.entries();
            let i = (0..=d as usize)
                .find(|&i| e[i] != e[d as usize - i])
                .expect("asymmetric entry exists");
            check_result(Some(AsymmetricPair {
                i,
                h_i: e[i].clone(),
                h_d_minus_i: e[d as usize - i].clone(),
            }))
        }
    }
}

fn g_operand(
    inline: Option<&str>,
    file: Option<&Path>,
    flag_d: Option<i64>,
) -> Result<(Option<i64>, Vec<ExactInt>), CliError> {
    let input = parse_vector(&read_source(inline, file)?)?;
    check_kind(&input, VecKind::G)?;
    Ok((resolve_d(flag_d, input.d)?, input.entries))
}

fn compare_cmd(a: CompareArgs) -> Res {
    let (d1, g1) = g_operand(a.g1.as_deref(), a.g1_file.as_deref(), a.d)?;
    let (d2, g2) = g_operand(a.g2.as_deref(), a.g2_file.as_deref(), a.d)?;
    let dim = dimension(resolve_d(d1, d2)?)?;
    let report = compare(&GVector::new(dim, g1)?, &GVector::new(dim, g2)?, a.r)?;
    let holds = !report.premise_holds || report.all_bounds_hold();
    emit(&report, holds)
}

fn bounds(a: BoundsArgs) -> Res {
    let dim = Dimension::new(a.d)?;
    let value = parse_int_str(&a.value)?;
    let report = match a.kind {
        BoundsKind::Simplicial => sandwich_simplicial(dim, a.r, &value)?,
        BoundsKind::Cs => lower_bound_cs(dim, a.r, &value)?,
    };
    emit(&report, true)
}

fn parse_order(order: &str, only: Option<usize>) -> Result<MinorOrder, CliError> {
    if let Some(k) = only {
        return Ok(MinorOrder::Exactly(k));
    }
    if order == "all" {
        return Ok(MinorOrder::All);
    }
    match order.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(MinorOrder::UpTo(k)),
        _ => Err(CliError::usage(format!(
            "--order must be a positive integer or `all`, got {order:?}"
        ))),
    }
}

fn verify(v: VerifyCommand, exec: Execution) -> Res {
    match v {
        VerifyCommand::Minors { d, order, only } => {
            let dim = Dimension::new(d)?;
            let order = parse_order(&order, only)?;
            if let MinorOrder::Exactly(k) = order {
                if k == 0 || k > dim.delta() + 1 {
                    return Err(CliError::validation(format!(
                        "--only must lie in 1..={}",
                        dim.delta() + 1
                    )));
                }
            }
            let report = scan_minors(dim, order, exec);
            emit(&report, report.all_nonnegative)
        }
        VerifyCommand::Gv { max } => {
            let report = gv_scan(max, exec);
            emit(&report, report.all_hold)
        }
        VerifyCommand::Phi { d } => {
            let report = verify_phi_with(Dimension::new(d)?, exec);
            let passed = report.passed();
            emit(&report, passed)
        }
        VerifyCommand::RatioChain { d, r, s } => {
            let chain = ratio_chain(Dimension::new(d)?, r, s)?;
            let holds = chain.holds();
            emit(&chain, holds)
        }
    }
}
