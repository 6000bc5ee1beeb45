"""Root-group calculus in Moufang hexagons and octagons."""
