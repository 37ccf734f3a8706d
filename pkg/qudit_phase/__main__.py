if __name__ == '__main__':
    from qudit_phase import phaseapp as app
    app.launch_new_instance()
