from rich.theme import Theme

hampic_theme = Theme(
    {
        "data": "#999966",
        "field": "#8A2BE2",
        "particle": "#32CD32",
        "time": "#6495ED",
        "warn": "bold #FF8C00",
    }
)

check_emoji = ":heavy_check_mark:"
cross_emoji = ":x:"
