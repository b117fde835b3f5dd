//! WebAssembly bindings behind `www/index.html`. Each export takes plain
//! strings and returns a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use traintrack::geometry::theta;
use traintrack::render::{cell_svg, diagram_svg};
use traintrack::twocells::{braiding_cell, extract_braid, oriented, GEOMETRIC_HANDEDNESS};
use traintrack::{dsl, Colour, ColouredBraid, ColourWord, DiagramWord, Sign};

fn diagram(src: &str) -> Result<DiagramWord, String> {
    dsl::parse_any(src).map_err(|e| e.render(src))
}

fn word(src: &str) -> Result<ColourWord, String> {
    let colours = src
        .split(',')
        .map(|name| Colour::new(name.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ColourWord(colours))
}

/// Canonical form, picture, linearized word and contraction certificate.
pub fn canonicalize_json(src: &str) -> Result<String, String> {
    let d = diagram(src)?;
    let canonical = d.canonicalize();
    let certificate = d.contract().map_err(|e| e.to_string())?;
    certificate.replay(&d).map_err(|e| e.to_string())?;
    let steps: Vec<String> = certificate.steps.iter().map(|s| s.to_string()).collect();
    Ok(json!({
        "canonical": dsl::print(&canonical),
        "svg": diagram_svg(&canonical),
        "theta": theta(&d).0.to_string(),
        "certificate": steps,
    })
    .to_string())
}

pub fn equal_json(left: &str, right: &str) -> Result<String, String> {
    let (l, r) = (diagram(left)?, diagram(right)?);
    Ok(json!({
        "equal": l.equals(&r),
        "left": dsl::print(&l.canonicalize()),
        "right": dsl::print(&r.canonicalize()),
    })
    .to_string())
}

/// The braiding `T_{f,g}` for comma separated colour words; `handedness` is
/// `1` or `-1`, anything else uses the measured sign.
pub fn braiding_json(f: &str, g: &str, handedness: i32) -> Result<String, String> {
    let (f, g) = (word(f)?, word(g)?);
    let sign = match handedness {
        1 => Sign::Positive,
        -1 => Sign::Negative,
        _ => GEOMETRIC_HANDEDNESS,
    };
    let cell = braiding_cell(&f, &g).map_err(|e| e.to_string())?;
    let braid = oriented(extract_braid(&cell).map_err(|e| e.to_string())?, sign).freely_reduced();
    let block = ColouredBraid::block_braiding(&f, &g, sign);
    Ok(json!({
        "braid": braid.to_string(),
        "block": braid.equals(&block),
        "source": cell.source().to_string(),
        "target": cell.target().to_string(),
        "svg": cell_svg(&cell, &braid),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn canonicalize(src: &str) -> Result<String, JsError> {
    canonicalize_json(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn equal(left: &str, right: &str) -> Result<String, JsError> {
    equal_json(left, right).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn braiding(f: &str, g: &str, handedness: i32) -> Result<String, JsError> {
    braiding_json(f, g, handedness).map_err(|e| JsError::new(&e))
}
