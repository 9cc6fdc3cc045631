from cyclonorm.main import main

main()
