//! File formats: SVG pictures and the polygon JSON document.

mod document;
mod svg;

pub use document::{DocumentError, PolygonDocument, FORMAT_VERSION};
pub use svg::{render_svg, Layer, RenderConfig, RenderError};
