// filled in with the CLI front end
