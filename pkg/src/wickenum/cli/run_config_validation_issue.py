from wickenum.cli.messages.run_config_validation_messages import RunConfigValidationMessages


class RunConfigValidationIssue:
    def __init__(self, validation_message: RunConfigValidationMessages, *message_args):
        self.issue_type = validation_message.key
        self.message = validation_message.message.format(*message_args)
