//! Region-spec documents: the JSON input format for every subcommand.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toric_ech::{Error, MomentRegion, Point, Polygon, Rational, Result, StarPolygon};

/// A region, built from primitives and operations.
///
/// ```json
/// {"kind":"intersection","of":[{"kind":"ellipsoid","a":"2","b":"4"},
///                              {"kind":"ellipsoid","a":"4","b":"2"}]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RegionSpec {
    Ellipsoid {
        a: Rational,
        b: Rational,
    },
    Polydisk {
        a: Rational,
        b: Rational,
    },
    Ball {
        a: Rational,
    },
    Polygon {
        vertices: Vec<Point>,
    },
    Intersection {
        of: Vec<RegionSpec>,
    },
    Translate {
        of: Box<RegionSpec>,
        by: Point,
    },
    Scale {
        of: Box<RegionSpec>,
        factor: Rational,
        #[serde(default)]
        from: Point,
    },
}

/// A resolved region: convex, or merely simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Convex(MomentRegion),
    Simple(StarPolygon),
}

impl Shape {
    fn translate(&self, t: &Point) -> Shape {
        match self {
            Shape::Convex(r) => Shape::Convex(r.translate(t)),
            Shape::Simple(p) => Shape::Simple(p.translate(t)),
        }
    }

    fn scale_from(&self, factor: &Rational, center: &Point) -> Result<Shape> {
        Ok(match self {
            Shape::Convex(r) => Shape::Convex(r.scale_from(factor, center)?),
            Shape::Simple(p) => Shape::Simple(p.scale_from(factor, center)?),
        })
    }

    pub fn into_convex(self) -> Result<MomentRegion> {
        match self {
            Shape::Convex(r) => Ok(r),
            Shape::Simple(p) => p.to_moment_region(),
        }
    }

    pub fn into_simple(self) -> StarPolygon {
        match self {
            Shape::Convex(r) => r.to_star_polygon(),
            Shape::Simple(p) => p,
        }
    }
}

impl RegionSpec {
    pub fn parse(text: &str) -> Result<RegionSpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            message: format!("invalid region spec: {e}"),
            datum: text
                .lines()
                .nth(e.line().saturating_sub(1))
                .unwrap_or("")
                .trim()
                .to_string(),
        })
    }

    /// Reads a spec from `path`, or from standard input when `path` is `None` or `-`.
    pub fn load(path: Option<&Path>) -> Result<RegionSpec> {
        let text = match path {
            Some(p) if p != Path::new("-") => {
                std::fs::read_to_string(p).map_err(|e| Error::Parse {
                    message: format!("cannot read input: {e}"),
                    datum: p.display().to_string(),
                })?
            }
            _ => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Parse {
                        message: format!("cannot read standard input: {e}"),
                        datum: "-".into(),
                    })?;
                buf
            }
        };
        RegionSpec::parse(&text)
    }

    /// Spec listing the vertices of an existing region.
    pub fn from_region(region: &MomentRegion) -> RegionSpec {
        RegionSpec::Polygon {
            vertices: region.vertices().to_vec(),
        }
    }

    pub fn resolve(&self) -> Result<Shape> {
        match self {
            RegionSpec::Ellipsoid { a, b } => Ok(Shape::Convex(MomentRegion::ellipsoid(a, b)?)),
            RegionSpec::Polydisk { a, b } => Ok(Shape::Convex(MomentRegion::polydisk(a, b)?)),
            RegionSpec::Ball { a } => Ok(Shape::Convex(MomentRegion::ball(a)?)),
            RegionSpec::Polygon { vertices } => {
                let poly = StarPolygon::new(vertices.clone())?;
                Ok(match poly.to_moment_region() {
                    Ok(r) => Shape::Convex(r),
                    Err(_) => Shape::Simple(poly),
                })
            }
            RegionSpec::Intersection { of } => {
                let mut parts = of.iter();
                let first = parts.next().ok_or_else(|| Error::InvalidParameter {
                    message: "intersection needs at least one operand".into(),
                    datum: "[]".into(),
                })?;
                let mut acc = first.resolve_convex()?;
                for part in parts {
                    acc = acc.intersect(&part.resolve_convex()?)?;
                }
                Ok(Shape::Convex(acc))
            }
            RegionSpec::Translate { of, by } => Ok(of.resolve()?.translate(by)),
            RegionSpec::Scale { of, factor, from } => of.resolve()?.scale_from(factor, from),
        }
    }

    /// Resolves to a convex region, as the capacity engine requires.
    pub fn resolve_convex(&self) -> Result<MomentRegion> {
        self.resolve()?.into_convex()
    }

    pub fn resolve_simple(&self) -> Result<StarPolygon> {
        Ok(self.resolve()?.into_simple())
    }
}
