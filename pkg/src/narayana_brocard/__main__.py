from narayana_brocard.cli import main

main()
