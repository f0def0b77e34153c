//! Reader for the line-oriented chain format.
//!
//! ```text
//! vars: x, y, a
//! nonzero: x, x - 1
//! def f = x*y + a            # trailing comments become step labels
//! res g = R(f, h, a)         # optionally `R(f, h, a) / nonzero`
//! sub f0 = f[x := y + 1]
//! strip k = g / (x - 1)^2    # `^*` strips to saturation
//! strip k0 = k / nonzero     # every listed factor, to saturation
//! content k1 = k
//! coeff c0 = g[y^0]
//! assert g ~ x*(x - 1)^2
//! assert deg(g, y) = 4
//! assert c0 != 0 const
//! assert k = 0
//! ```

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{ChainScript, ChainStep, ScriptError, ScriptStep, StripCount};
use crate::arith::RationalField;
use crate::poly::{is_identifier, parse_poly, parse_poly_with, Poly, VarTable};

fn err(line: usize, message: impl Into<String>) -> ScriptError {
    ScriptError { line, message: message.into() }
}

/// `lhs = rhs` with a valid identifier on the left.
fn split_assignment(line: usize, s: &str) -> Result<(String, &str), ScriptError> {
    let (lhs, rhs) = s.split_once('=').ok_or_else(|| err(line, "expected `name = ...`"))?;
    let name = lhs.trim();
    if !is_identifier(name) {
        return Err(err(line, format!("`{name}` is not a valid name")));
    }
    Ok((name.to_string(), rhs.trim()))
}

fn ident(line: usize, s: &str, what: &str) -> Result<String, ScriptError> {
    let s = s.trim();
    if is_identifier(s) {
        Ok(s.to_string())
    } else {
        Err(err(line, format!("expected {what}, found `{s}`")))
    }
}

/// Splits `source[inner]` into its two parts.
fn bracketed(line: usize, s: &str) -> Result<(String, &str), ScriptError> {
    let open = s.find('[').ok_or_else(|| err(line, "expected `source[...]`"))?;
    let inner = s[open + 1..].strip_suffix(']').ok_or_else(|| err(line, "missing closing `]`"))?;
    Ok((ident(line, &s[..open], "a chain name")?, inner))
}

fn parse_step(line: usize, keyword: &str, rest: &str) -> Result<ChainStep, ScriptError> {
    match keyword {
        "def" => {
            let (name, poly) = split_assignment(line, rest)?;
            Ok(ChainStep::Define { name, poly: poly.to_string() })
        }
        "res" => {
            let (target, rhs) = split_assignment(line, rest)?;
            let (call, strip_nonzero) = match rhs.rsplit_once('/') {
                Some((call, tail)) if tail.trim() == "nonzero" => (call.trim(), true),
                Some(_) => return Err(err(line, "only `/ nonzero` may follow a resultant")),
                None => (rhs, false),
            };
            let args = call
                .strip_prefix("R(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err(line, "expected `R(f, g, var)`"))?;
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(err(line, "R takes three arguments"));
            }
            Ok(ChainStep::Resultant {
                target,
                f: ident(line, parts[0], "a chain name")?,
                g: ident(line, parts[1], "a chain name")?,
                var: ident(line, parts[2], "a variable")?,
                strip_nonzero,
            })
        }
        "sub" => {
            let (target, rhs) = split_assignment(line, rest)?;
            let (source, inner) = bracketed(line, rhs)?;
            let (var, poly) = inner.split_once(":=").ok_or_else(|| err(line, "expected `[var := poly]`"))?;
            Ok(ChainStep::Substitute {
                target,
                source,
                var: ident(line, var, "a variable")?,
                poly: poly.trim().to_string(),
            })
        }
        "strip" => {
            let (target, rhs) = split_assignment(line, rest)?;
            let (source, factor) = rhs.split_once('/').ok_or_else(|| err(line, "expected `source / (factor)^k`"))?;
            let factor = factor.trim();
            if factor == "nonzero" {
                return Ok(ChainStep::StripNonzero { target, source: ident(line, source, "a chain name")? });
            }
            let close = factor.rfind(')').filter(|_| factor.starts_with('('));
            let Some(close) = close else {
                return Err(err(line, "the factor must be parenthesised"));
            };
            let poly = factor[1..close].trim().to_string();
            let tail = factor[close + 1..].trim();
            let count = if tail.is_empty() {
                StripCount::Exactly(1)
            } else {
                let e = tail.strip_prefix('^').ok_or_else(|| err(line, format!("unexpected `{tail}`")))?.trim();
                if e == "*" {
                    StripCount::Saturate
                } else {
                    StripCount::Exactly(e.parse().map_err(|_| err(line, format!("bad multiplicity `{e}`")))?)
                }
            };
            Ok(ChainStep::Strip { target, source: ident(line, source, "a chain name")?, factor: poly, count })
        }
        "content" => {
            let (target, rhs) = split_assignment(line, rest)?;
            Ok(ChainStep::StripContent { target, source: ident(line, rhs, "a chain name")? })
        }
        "coeff" => {
            let (target, rhs) = split_assignment(line, rest)?;
            let (source, inner) = bracketed(line, rhs)?;
            let (var, k) = inner.split_once('^').ok_or_else(|| err(line, "expected `[var^k]`"))?;
            let k = k.trim().parse().map_err(|_| err(line, format!("bad power `{}`", k.trim())))?;
            Ok(ChainStep::CoefficientOf { target, source, var: ident(line, var, "a variable")?, k })
        }
        "assert" => parse_assert(line, rest),
        other => Err(err(line, format!("unknown step `{other}`"))),
    }
}

fn parse_assert(line: usize, rest: &str) -> Result<ChainStep, ScriptError> {
    if let Some(inner) = rest.strip_prefix("deg(") {
        let (args, d) = inner.split_once(')').ok_or_else(|| err(line, "expected `deg(name, var) = d`"))?;
        let (name, var) = args.split_once(',').ok_or_else(|| err(line, "expected `deg(name, var)`"))?;
        let d = d.trim().strip_prefix('=').ok_or_else(|| err(line, "expected `= d`"))?.trim();
        let degree = d.parse().map_err(|_| err(line, format!("bad degree `{d}`")))?;
        return Ok(ChainStep::AssertDegree {
            name: ident(line, name, "a chain name")?,
            var: ident(line, var, "a variable")?,
            degree,
        });
    }
    if let Some((name, expected)) = rest.split_once('~') {
        return Ok(ChainStep::AssertIdentityUpToScalar {
            name: ident(line, name, "a chain name")?,
            expected: expected.trim().to_string(),
        });
    }
    if let Some((name, tail)) = rest.split_once("!=") {
        let tail: Vec<&str> = tail.split_whitespace().collect();
        if tail != ["0", "const"] {
            return Err(err(line, "expected `name != 0 const`"));
        }
        return Ok(ChainStep::AssertNonzeroConstant { name: ident(line, name, "a chain name")? });
    }
    if let Some((name, tail)) = rest.split_once('=') {
        if tail.trim() != "0" {
            return Err(err(line, "expected `name = 0`"));
        }
        return Ok(ChainStep::AssertZero { name: ident(line, name, "a chain name")? });
    }
    Err(err(line, "unrecognised assertion"))
}

/// Parses and validates a chain script.
pub fn parse_script(name: &str, text: &str) -> Result<ChainScript, ScriptError> {
    let mut vars: Option<VarTable> = None;
    let mut nonzero = Vec::new();
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b.trim(), Some(c.trim())),
            None => (raw.trim(), None),
        };
        if body.is_empty() {
            continue;
        }
        if let Some(list) = body.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(err(line, "`vars:` declared twice"));
            }
            if !steps.is_empty() {
                return Err(err(line, "`vars:` must precede every step"));
            }
            vars = Some(VarTable::parse_list(list).map_err(|e| err(line, e.to_string()))?);
            continue;
        }
        if let Some(list) = body.strip_prefix("nonzero:") {
            let Some(v) = vars.as_ref() else {
                return Err(err(line, "`nonzero:` before `vars:`"));
            };
            for item in list.split(',') {
                let item = item.trim();
                parse_poly(item, v, RationalField).map_err(|e| err(line, format!("`{item}`: {e}")))?;
                nonzero.push(item.to_string());
            }
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        if vars.is_none() {
            return Err(err(line, "missing `vars:` declaration before the first step"));
        }
        let step = parse_step(line, keyword, rest.trim())?;
        let label = comment.filter(|c| !c.is_empty()).map(str::to_string);
        steps.push(ScriptStep { step, line, label });
    }
    let Some(vars) = vars else {
        return Err(err(0, "empty script: no `vars:` declaration"));
    };
    if steps.is_empty() {
        return Err(err(0, "empty script: no steps"));
    }
    let script = ChainScript { name: name.to_string(), vars, nonzero, steps };
    validate(&script)?;
    Ok(script)
}

fn validate(script: &ChainScript) -> Result<(), ScriptError> {
    let vars = &script.vars;
    let mut defined: BTreeSet<&str> = BTreeSet::new();
    for s in &script.steps {
        let line = s.line;
        for src in s.step.sources() {
            if !defined.contains(src) {
                return Err(err(line, format!("undefined name `{src}`")));
            }
        }
        let check_var = |v: &str| {
            vars.index_of(v).map(|_| ()).ok_or_else(|| err(line, format!("`{v}` is not a declared variable")))
        };
        let check_poly = |text: &str| {
            let nv = vars.len();
            let dummy = |n: &str| defined.contains(n).then(|| Poly::one(RationalField, nv));
            parse_poly_with(text, vars, RationalField, &dummy)
                .map(|_| ())
                .map_err(|e| err(line, format!("`{text}`: {e}")))
        };
        match &s.step {
            ChainStep::Define { poly, .. } => check_poly(poly)?,
            ChainStep::Resultant { var, strip_nonzero, .. } => {
                check_var(var)?;
                if *strip_nonzero && script.nonzero.is_empty() {
                    return Err(err(line, "`/ nonzero` used but no `nonzero:` list declared"));
                }
            }
            ChainStep::StripNonzero { .. } if script.nonzero.is_empty() => {
                return Err(err(line, "`/ nonzero` used but no `nonzero:` list declared"));
            }
            ChainStep::Substitute { var, poly, .. } => {
                check_var(var)?;
                check_poly(poly)?;
            }
            ChainStep::Strip { factor, .. } => check_poly(factor)?,
            ChainStep::CoefficientOf { var, .. } | ChainStep::AssertDegree { var, .. } => check_var(var)?,
            ChainStep::AssertIdentityUpToScalar { expected, .. } => check_poly(expected)?,
            ChainStep::StripNonzero { .. }
            | ChainStep::StripContent { .. }
            | ChainStep::AssertNonzeroConstant { .. }
            | ChainStep::AssertZero { .. } => {}
        }
        if let Some(t) = s.step.target() {
            if vars.index_of(t).is_some() {
                return Err(err(line, format!("`{t}` is a variable, not a fresh name")));
            }
            if !defined.insert(t) {
                return Err(err(line, format!("`{t}` is already defined")));
            }
        }
    }
    Ok(())
}
