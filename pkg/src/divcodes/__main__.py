from divcodes.cli import main

main()
