use super::{parse_script, ChainScript, ScriptError};

pub const BUILTIN_NAMES: [&str; 5] = ["lemma1", "path1212", "path1231", "path1232", "theta43"];

/// Source text of a built-in script.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "lemma1" => include_str!("../../scripts/lemma1.chain"),
        "path1212" => include_str!("../../scripts/path1212.chain"),
        "path1231" => include_str!("../../scripts/path1231.chain"),
        "path1232" => include_str!("../../scripts/path1232.chain"),
        "theta43" => include_str!("../../scripts/theta43.chain"),
        _ => return None,
    })
}

/// A built-in script by name, or `None` for an unknown name.
pub fn builtin_script(name: &str) -> Option<Result<ChainScript, ScriptError>> {
    builtin_source(name).map(|src| parse_script(name, src))
}
