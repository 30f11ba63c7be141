EXTENSIONS = (
    "commands.sweeps",
    "commands.functions",
    "commands.diagnostics",
)
