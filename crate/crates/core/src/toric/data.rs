//! The eighteen smooth toric Fano 3-fold fans shipped with the crate.
//!
//! Each fan is a JSON file `{name, rays, cones}` under `data/fans/NN.json`.
//! Fan (4) uses the generator `-e1 - 2e2 - e3`, which makes it the
//! projectivisation of `O + O(2)` over the plane, as opposed to `O + O(1)`
//! for fan (3).

use std::path::Path;

use crate::error::FanError;
use crate::toric::fan::Fan3;

pub const NUM_BUILTIN_FANS: usize = 18;

/// Environment variable naming a directory of `NN.json` fan files that
/// replaces the embedded data.
pub const FAN_DIR_ENV: &str = "LTP_HODGE_FAN_DIR";

const FAN_JSON: [&str; NUM_BUILTIN_FANS] = [
    include_str!("../../data/fans/01.json"),
    include_str!("../../data/fans/02.json"),
    include_str!("../../data/fans/03.json"),
    include_str!("../../data/fans/04.json"),
    include_str!("../../data/fans/05.json"),
    include_str!("../../data/fans/06.json"),
    include_str!("../../data/fans/07.json"),
    include_str!("../../data/fans/08.json"),
    include_str!("../../data/fans/09.json"),
    include_str!("../../data/fans/10.json"),
    include_str!("../../data/fans/11.json"),
    include_str!("../../data/fans/12.json"),
    include_str!("../../data/fans/13.json"),
    include_str!("../../data/fans/14.json"),
    include_str!("../../data/fans/15.json"),
    include_str!("../../data/fans/16.json"),
    include_str!("../../data/fans/17.json"),
    include_str!("../../data/fans/18.json"),
];

pub fn parse_fan_json(text: &str) -> Result<Fan3, FanError> {
    serde_json::from_str(text).map_err(|e| FanError::Data(e.to_string()))
}

/// Built-in fan `id` (1-based, in the usual list order).
pub fn builtin_fan(id: usize) -> Result<Fan3, FanError> {
    let text = FAN_JSON
        .get(id.wrapping_sub(1))
        .ok_or(FanError::UnknownId(id))?;
    parse_fan_json(text)
}

pub fn builtin_fans() -> Vec<(usize, Fan3)> {
    (1..=NUM_BUILTIN_FANS)
        .map(|id| (id, builtin_fan(id).expect("embedded fan data parses")))
        .collect()
}

/// Fan `id`, read from `dir/NN.json` when a directory is given.
pub fn load_fan(id: usize, dir: Option<&Path>) -> Result<Fan3, FanError> {
    if !(1..=NUM_BUILTIN_FANS).contains(&id) {
        return Err(FanError::UnknownId(id));
    }
    match dir {
        None => builtin_fan(id),
        Some(dir) => {
            let path = dir.join(format!("{id:02}.json"));
            let text = std::fs::read_to_string(&path)
                .map_err(|e| FanError::Data(format!("{}: {e}", path.display())))?;
            parse_fan_json(&text)
        }
    }
}
