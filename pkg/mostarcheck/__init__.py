class MostarCheckError(Exception):
    def __init__(self, message: str, exit_code: int = 2):
        super().__init__(message)
        self.exit_code = exit_code


indentation = "    " # for textwrap.indent
