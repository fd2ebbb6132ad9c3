# Bundled .quiver and complex files for the worked examples
