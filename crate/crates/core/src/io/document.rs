use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{Block, PlaidPolygon, TraceError, UnitSquare};
use crate::param::{make_param, Param, ParamError};
use crate::scalar::{parse_fraction, to_fraction_string};
use crate::Rat;

pub const FORMAT_VERSION: u32 = 1;

/// Polygons of some blocks, vertices given as tile centers in `"num/den"`
/// form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub format: u32,
    pub p: i64,
    pub q: i64,
    pub blocks: Vec<[i64; 2]>,
    pub polygons: Vec<Vec<[String; 2]>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("unsupported format {0}")]
    Format(u32),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("bad coordinate {0:?}")]
    Coordinate(String),
    #[error(transparent)]
    Polygon(#[from] TraceError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl PolygonDocument {
    pub fn new(param: &Param, blocks: &[Block], polygons: &[PlaidPolygon]) -> Self {
        let center = |v: &UnitSquare| {
            let (x, y) = v.center::<Rat>();
            [to_fraction_string(&x), to_fraction_string(&y)]
        };
        PolygonDocument {
            format: FORMAT_VERSION,
            p: param.p(),
            q: param.q(),
            blocks: blocks.iter().map(|b| [b.i, b.j]).collect(),
            polygons: polygons.iter().map(|p| p.vertices().iter().map(center).collect()).collect(),
        }
    }

    pub fn param(&self) -> Result<Param, DocumentError> {
        Ok(make_param(self.p, self.q)?)
    }

    pub fn blocks(&self) -> Vec<Block> {
        self.blocks.iter().map(|&[i, j]| Block::new(i, j)).collect()
    }

    /// Parses the vertex lists back into canonical polygons.
    pub fn polygons(&self) -> Result<Vec<PlaidPolygon>, DocumentError> {
        if self.format != FORMAT_VERSION {
            return Err(DocumentError::Format(self.format));
        }
        self.polygons
            .iter()
            .map(|verts| {
                let squares = verts
                    .iter()
                    .map(|[x, y]| {
                        let parse = |s: &String| parse_fraction::<Rat>(s).ok_or_else(|| DocumentError::Coordinate(s.clone()));
                        UnitSquare::from_center(&parse(x)?, &parse(y)?)
                            .ok_or_else(|| DocumentError::Coordinate(format!("{x},{y}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(PlaidPolygon::new(squares)?)
            })
            .collect()
    }

    /// Pretty JSON with a trailing newline; stable for golden files.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, DocumentError> {
        let doc: PolygonDocument = serde_json::from_str(s)?;
        if doc.format != FORMAT_VERSION {
            return Err(DocumentError::Format(doc.format));
        }
        Ok(doc)
    }
}
