//! Reference classification data for ten-edge trees and checks against it.
